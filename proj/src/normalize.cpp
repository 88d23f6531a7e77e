#include "visrank/normalize.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace visrank {
namespace {

#include "unicode_tables.inc"

constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

int combining_class(char32_t cp) {
    auto it = std::lower_bound(std::begin(kCcc), std::end(kCcc), cp,
                               [](const CccEntry& e, char32_t c) { return e.cp < c; });
    return (it != std::end(kCcc) && it->cp == cp) ? it->ccc : 0;
}

const SeqEntry* find_seq(const SeqEntry* first, const SeqEntry* last, char32_t cp) {
    auto it = std::lower_bound(first, last, cp,
                               [](const SeqEntry& e, char32_t c) { return e.cp < c; });
    return (it != last && it->cp == cp) ? it : nullptr;
}

char32_t compose_pair(char32_t a, char32_t b) {
    // Hangul LV and LVT composition is algorithmic.
    if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount && b >= kHangulVBase &&
        b < kHangulVBase + kHangulVCount) {
        return kHangulSBase +
               ((a - kHangulLBase) * kHangulVCount + (b - kHangulVBase)) * kHangulTCount;
    }
    if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
        (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
        b < kHangulTBase + kHangulTCount) {
        return a + (b - kHangulTBase);
    }
    auto it = std::lower_bound(std::begin(kComp), std::end(kComp), std::pair(a, b),
                               [](const CompEntry& e, const std::pair<char32_t, char32_t>& key) {
                                   return e.a != key.first ? e.a < key.first : e.b < key.second;
                               });
    if (it != std::end(kComp) && it->a == a && it->b == b) return it->composite;
    return 0;
}

void decompose_into(char32_t cp, std::vector<char32_t>& out) {
    if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
        const char32_t s = cp - kHangulSBase;
        out.push_back(kHangulLBase + s / kHangulNCount);
        out.push_back(kHangulVBase + (s % kHangulNCount) / kHangulTCount);
        if (s % kHangulTCount != 0) out.push_back(kHangulTBase + s % kHangulTCount);
        return;
    }
    // kDecomp holds full canonical decompositions, so no recursion is needed.
    if (const SeqEntry* e = find_seq(std::begin(kDecomp), std::end(kDecomp), cp)) {
        for (std::uint32_t i = 0; i < e->len; ++i) out.push_back(kDecompPool[e->offset + i]);
        return;
    }
    out.push_back(cp);
}

// Canonical ordering: stable sort of combining marks by class within each
// run of non-starters (UAX #15 uses adjacent swaps; this is equivalent).
void canonical_reorder(std::vector<char32_t>& cps) {
    std::size_t i = 0;
    while (i < cps.size()) {
        if (combining_class(cps[i]) == 0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < cps.size() && combining_class(cps[j]) != 0) ++j;
        std::stable_sort(cps.begin() + i, cps.begin() + j,
                         [](char32_t a, char32_t b) {
                             return combining_class(a) < combining_class(b);
                         });
        i = j;
    }
}

void canonical_compose(std::vector<char32_t>& cps) {
    if (cps.empty()) return;
    std::vector<char32_t> out;
    out.reserve(cps.size());
    out.push_back(cps[0]);
    int starter = combining_class(cps[0]) == 0 ? 0 : -1;
    int prev_cc = combining_class(cps[0]);
    for (std::size_t i = 1; i < cps.size(); ++i) {
        const char32_t cp = cps[i];
        const int cc = combining_class(cp);
        // Composable iff cp directly follows the starter (prev_cc == 0) or no
        // intervening mark blocks it (prev_cc < cc).
        if (starter >= 0 && (prev_cc == 0 || prev_cc < cc)) {
            if (char32_t composite = compose_pair(out[static_cast<std::size_t>(starter)], cp)) {
                out[static_cast<std::size_t>(starter)] = composite;
                continue;
            }
        }
        if (cc == 0) starter = static_cast<int>(out.size());
        prev_cc = cc;
        out.push_back(cp);
    }
    cps = std::move(out);
}

bool decode_utf8(std::string_view s, std::vector<char32_t>& out) {
    const auto* p = reinterpret_cast<const unsigned char*>(s.data());
    std::size_t n = s.size();
    std::size_t i = 0;
    while (i < n) {
        const unsigned char b0 = p[i];
        char32_t cp;
        std::size_t len;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (std::size_t k = 1; k < len; ++k) {
            if ((p[i + k] & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (p[i + k] & 0x3F);
        }
        // reject overlongs, surrogates and out-of-range values
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
            (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
            return false;
        }
        out.push_back(cp);
        i += len;
    }
    return true;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::vector<char32_t> decode_or_throw(std::string_view s) {
    std::vector<char32_t> cps;
    cps.reserve(s.size());
    if (!decode_utf8(s, cps)) throw std::invalid_argument("malformed UTF-8");
    return cps;
}

std::string encode(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) encode_utf8(cp, out);
    return out;
}

}  // namespace

bool is_valid_utf8(std::string_view s) {
    std::vector<char32_t> cps;
    return decode_utf8(s, cps);
}

std::string nfc(std::string_view s) {
    std::vector<char32_t> cps = decode_or_throw(s);
    std::vector<char32_t> decomposed;
    decomposed.reserve(cps.size());
    for (char32_t cp : cps) decompose_into(cp, decomposed);
    canonical_reorder(decomposed);
    canonical_compose(decomposed);
    return encode(decomposed);
}

std::string casefold(std::string_view s) {
    std::vector<char32_t> cps = decode_or_throw(s);
    std::vector<char32_t> folded;
    folded.reserve(cps.size());
    for (char32_t cp : cps) {
        if (const SeqEntry* e = find_seq(std::begin(kFold), std::end(kFold), cp)) {
            for (std::uint32_t i = 0; i < e->len; ++i) folded.push_back(kFoldPool[e->offset + i]);
        } else {
            folded.push_back(cp);
        }
    }
    return encode(folded);
}

std::string fold_key(std::string_view s) { return nfc(casefold(nfc(s))); }

}  // namespace visrank
