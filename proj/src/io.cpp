#include "visrank/io.hpp"

#include "visrank/error.hpp"
#include "visrank/normalize.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>

namespace visrank {
namespace {

using jsonx = nlohmann::ordered_json;

struct Reader {
    std::istream& in;
    std::size_t line_no = 0;

    bool next(std::string& line) {
        if (!std::getline(in, line)) return false;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }
};

bool is_comment(std::string_view line) {
    return line == "#" || line.substr(0, 2) == "# ";
}

// Leading "# key=value" block; stops at the first data line without
// consuming it.
std::vector<std::pair<std::string, std::string>> skip_comment_block(Reader& r) {
    std::vector<std::pair<std::string, std::string>> kv;
    std::string line;
    while (r.in.peek() == '#') {
        if (!r.next(line)) break;
        if (!is_comment(line)) break;  // '#...' without space: treat as data? never written by us
        std::string_view body = std::string_view(line).substr(std::min<std::size_t>(2, line.size()));
        auto eq = body.find('=');
        if (eq != std::string_view::npos)
            kv.emplace_back(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
    }
    return kv;
}

std::string norm_word(std::string_view raw, std::size_t line) {
    try {
        return nfc(raw);
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid UTF-8 in word", line);
    }
}

std::uint64_t parse_count(std::string_view s, std::size_t line) {
    if (s.empty()) throw ParseError("empty count field", line);
    if (s.front() == '-') throw ParseError("negative count", line);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("count is not a nonnegative integer", line);
    return value;
}

double parse_double(std::string_view s, std::size_t line, const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(std::string("malformed number in ") + what, line);
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_tabs(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = s.find('\t', start);
        if (tab == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, tab - start));
        start = tab + 1;
    }
}

std::string dtos(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

jsonx parse_json_line(const std::string& line, std::size_t line_no) {
    try {
        jsonx j = jsonx::parse(line);
        if (!j.is_object()) throw ParseError("record is not a JSON object", line_no);
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), line_no);
    }
}

std::string require_string(const jsonx& j, const char* key, std::size_t line) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'", line);
    if (!j.at(key).is_string())
        throw ParseError(std::string("field '") + key + "' is not a string", line);
    std::string v = j.at(key).get<std::string>();
    if (v.empty()) throw ValidationError(std::string("field '") + key + "' is empty", line);
    return v;
}

double require_number(const jsonx& j, const char* key, std::size_t line) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'", line);
    if (!j.at(key).is_number())
        throw ParseError(std::string("field '") + key + "' is not a number", line);
    return j.at(key).get<double>();
}

}  // namespace

HypothesesLoad load_hypotheses(std::istream& in) {
    HypothesesLoad out;
    Reader r{in};
    skip_comment_block(r);
    std::string line;
    while (r.next(line)) {
        if (line.empty()) continue;
        const jsonx j = parse_json_line(line, r.line_no);
        HypothesisList rec;
        rec.image_id = require_string(j, "image_id", r.line_no);
        if (j.contains("gold") && !j.at("gold").is_null()) {
            if (!j.at("gold").is_string())
                throw ParseError("field 'gold' is not a string or null", r.line_no);
            std::string g = j.at("gold").get<std::string>();
            if (g.empty()) throw ValidationError("field 'gold' is empty", r.line_no);
            rec.gold = norm_word(g, r.line_no);
        }
        if (!j.contains("hypotheses") || !j.at("hypotheses").is_array())
            throw ParseError("missing or non-array field 'hypotheses'", r.line_no);
        const auto& arr = j.at("hypotheses");
        if (arr.empty()) throw ValidationError("hypotheses must be non-empty", r.line_no);
        rec.hypotheses.reserve(arr.size());
        for (const auto& h : arr) {
            if (!h.is_object()) throw ParseError("hypothesis entry is not an object", r.line_no);
            Hypothesis hyp;
            hyp.word = norm_word(require_string(h, "word", r.line_no), r.line_no);
            hyp.score = require_number(h, "score", r.line_no);
            if (!(hyp.score > 0.0) || hyp.score > 1.0)
                throw ValidationError("score must lie in (0,1]", r.line_no);
            hyp.base_score = hyp.score;
            rec.hypotheses.push_back(std::move(hyp));
        }
        if (!std::is_sorted(rec.hypotheses.begin(), rec.hypotheses.end(),
                            [](const Hypothesis& a, const Hypothesis& b) {
                                return a.score > b.score;
                            })) {
            std::stable_sort(rec.hypotheses.begin(), rec.hypotheses.end(),
                             [](const Hypothesis& a, const Hypothesis& b) {
                                 return a.score > b.score;
                             });
            ++out.reorder_warnings;
        }
        out.lists.push_back(std::move(rec));
    }
    return out;
}

void save_hypotheses(const std::vector<HypothesisList>& lists, std::ostream& out) {
    for (const HypothesisList& rec : lists) {
        jsonx j;
        j["image_id"] = rec.image_id;
        j["gold"] = rec.gold ? jsonx(*rec.gold) : jsonx(nullptr);
        jsonx arr = jsonx::array();
        for (const Hypothesis& h : rec.hypotheses) arr.push_back({{"word", h.word}, {"score", h.score}});
        j["hypotheses"] = std::move(arr);
        out << j.dump() << '\n';
    }
}

ContextsLoad load_contexts(std::istream& in) {
    ContextsLoad out;
    Reader r{in};
    skip_comment_block(r);
    std::string line;
    while (r.next(line)) {
        if (line.empty()) continue;
        const jsonx j = parse_json_line(line, r.line_no);
        VisualContext rec;
        rec.image_id = require_string(j, "image_id", r.line_no);
        if (!j.contains("objects") || !j.at("objects").is_array())
            throw ParseError("missing or non-array field 'objects'", r.line_no);
        std::unordered_set<std::string> seen;
        for (const auto& o : j.at("objects")) {
            if (!o.is_object()) throw ParseError("object entry is not an object", r.line_no);
            DetectedObject obj;
            obj.label = norm_word(require_string(o, "label", r.line_no), r.line_no);
            obj.confidence = require_number(o, "confidence", r.line_no);
            if (obj.confidence < 0.0 || obj.confidence > 1.0)
                throw ValidationError("confidence must lie in [0,1]", r.line_no);
            if (!seen.insert(obj.label).second)
                throw ValidationError("duplicate object label '" + obj.label + "'", r.line_no);
            rec.objects.push_back(std::move(obj));
        }
        if (!std::is_sorted(rec.objects.begin(), rec.objects.end(),
                            [](const DetectedObject& a, const DetectedObject& b) {
                                return a.confidence > b.confidence;
                            })) {
            std::stable_sort(rec.objects.begin(), rec.objects.end(),
                             [](const DetectedObject& a, const DetectedObject& b) {
                                 return a.confidence > b.confidence;
                             });
            ++out.reorder_warnings;
        }
        auto [it, inserted] = out.by_image.insert_or_assign(rec.image_id, std::move(rec));
        if (!inserted) ++out.replaced;
    }
    return out;
}

void save_contexts(const std::vector<VisualContext>& contexts, std::ostream& out) {
    for (const VisualContext& rec : contexts) {
        jsonx j;
        j["image_id"] = rec.image_id;
        jsonx arr = jsonx::array();
        for (const DetectedObject& o : rec.objects)
            arr.push_back({{"label", o.label}, {"confidence", o.confidence}});
        j["objects"] = std::move(arr);
        out << j.dump() << '\n';
    }
}

EmbeddingsLoad load_embeddings(std::istream& in) {
    Reader r{in};
    std::string line;
    if (!r.next(line)) throw ParseError("missing 'V d' header", 1);
    const auto header = split_ws(line);
    if (header.size() != 2) throw ParseError("header must be 'V d'", r.line_no);
    const std::uint64_t vocab = parse_count(header[0], r.line_no);
    const std::uint64_t dim = parse_count(header[1], r.line_no);
    if (dim == 0) throw ParseError("dimension must be positive", r.line_no);

    EmbeddingsLoad out;
    out.space = EmbeddingSpace(dim);
    std::vector<double> row(dim);
    std::uint64_t rows_seen = 0;
    bool any_nonzero = false;
    while (r.next(line)) {
        if (line.empty()) continue;
        if (rows_seen == vocab)
            throw ParseError("more rows than the declared vocabulary size", r.line_no);
        ++rows_seen;
        const auto fields = split_ws(line);
        if (fields.size() != dim + 1)
            throw ParseError("row " + std::to_string(rows_seen) + " has " +
                                 std::to_string(fields.size() ? fields.size() - 1 : 0) +
                                 " components, expected " + std::to_string(dim),
                             r.line_no);
        const std::string word = norm_word(fields[0], r.line_no);
        if (word.empty()) throw ValidationError("empty word", r.line_no);
        double sumsq = 0.0;
        for (std::uint64_t i = 0; i < dim; ++i) {
            row[i] = parse_double(fields[i + 1], r.line_no, "embedding row");
            if (!std::isfinite(row[i]))
                throw ValidationError("non-finite embedding component", r.line_no);
            sumsq += row[i] * row[i];
        }
        if (!out.space.insert(word, row)) {
            ++out.duplicates_ignored;
            continue;
        }
        if (sumsq == 0.0)
            ++out.zero_norm_words;
        else
            any_nonzero = true;
    }
    if (rows_seen != vocab)
        throw ParseError("expected " + std::to_string(vocab) + " rows, found " +
                             std::to_string(rows_seen),
                         r.line_no + 1);
    if (!any_nonzero) throw ValidationError("embedding space has no nonzero vector");
    return out;
}

void save_embeddings(const EmbeddingSpace& space, std::ostream& out) {
    out << space.size() << ' ' << space.dimension() << '\n';
    for (const std::string& word : space.words()) {
        out << word;
        for (double v : space.vec(word)) out << ' ' << dtos(v);
        out << '\n';
    }
}

std::unordered_map<std::string, std::uint64_t> load_unigram_counts(std::istream& in) {
    std::unordered_map<std::string, std::uint64_t> counts;
    Reader r{in};
    skip_comment_block(r);
    std::string line;
    while (r.next(line)) {
        if (line.empty()) continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 2) throw ParseError("expected word<TAB>count", r.line_no);
        const std::string word = norm_word(fields[0], r.line_no);
        if (word.empty()) throw ValidationError("empty word", r.line_no);
        const std::uint64_t count = parse_count(fields[1], r.line_no);
        std::uint64_t& slot = counts[word];
        if (__builtin_add_overflow(slot, count, &slot))
            throw ValidationError("count overflow for word '" + word + "'", r.line_no);
    }
    return counts;
}

void save_unigram_counts(const std::unordered_map<std::string, std::uint64_t>& counts,
                         std::ostream& out) {
    std::vector<const std::string*> words;
    words.reserve(counts.size());
    for (const auto& [word, count] : counts) words.push_back(&word);
    std::sort(words.begin(), words.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    for (const std::string* w : words) out << *w << '\t' << counts.at(*w) << '\n';
}

CooccurrenceTable load_cooccurrence(std::istream& in) {
    CooccurrenceTable table;
    Reader r{in};
    for (const auto& [key, value] : skip_comment_block(r)) {
        if (key == "smoothing-epsilon")
            table.smoothing_epsilon = parse_double(value, r.line_no, "smoothing-epsilon");
    }
    std::string line;
    if (!r.next(line)) throw ParseError("missing VISRANK-TDP header", r.line_no + 1);
    const auto header = split_ws(line);
    if (header.size() != 2 || header[0] != "VISRANK-TDP")
        throw ParseError("missing VISRANK-TDP header", r.line_no);
    if (header[1] != "1")
        throw ParseError("unsupported VISRANK-TDP version '" + std::string(header[1]) + "'",
                         r.line_no);
    while (r.next(line)) {
        if (line.empty()) continue;
        const auto fields = split_tabs(line);
        if (fields[0] == "PAIR") {
            if (fields.size() != 4) throw ParseError("PAIR record needs word, object, count", r.line_no);
            const std::string word = norm_word(fields[1], r.line_no);
            const std::string object = norm_word(fields[2], r.line_no);
            const std::uint64_t count = parse_count(fields[3], r.line_no);
            if (count == 0) continue;
            if (!table.pair_counts.emplace(std::pair(word, object), count).second)
                throw ParseError("duplicate PAIR record for (" + word + "," + object + ")",
                                 r.line_no);
        } else if (fields[0] == "CTX") {
            if (fields.size() != 3) throw ParseError("CTX record needs object, count", r.line_no);
            const std::string object = norm_word(fields[1], r.line_no);
            const std::uint64_t count = parse_count(fields[2], r.line_no);
            if (count == 0) continue;
            if (!table.ctx_counts.emplace(object, count).second)
                throw ParseError("duplicate CTX record for '" + object + "'", r.line_no);
        } else {
            throw ParseError("unknown record tag '" + std::string(fields[0]) + "'", r.line_no);
        }
    }
    for (const auto& [key, count] : table.pair_counts) {
        if (table.ctx(key.second) < count)
            throw ValidationError("ctx count for '" + key.second +
                                  "' is smaller than a pair count that mentions it");
    }
    return table;
}

void save_cooccurrence(const CooccurrenceTable& table, std::ostream& out) {
    out << "# smoothing-epsilon=" << dtos(table.smoothing_epsilon) << '\n';
    out << "VISRANK-TDP 1\n";
    for (const auto& [key, count] : table.pair_counts) {
        if (count == 0) continue;
        out << "PAIR\t" << key.first << '\t' << key.second << '\t' << count << '\n';
    }
    for (const auto& [object, count] : table.ctx_counts) {
        if (count == 0) continue;
        out << "CTX\t" << object << '\t' << count << '\n';
    }
}

Dictionary load_dictionary(std::istream& in) {
    Dictionary dict;
    Reader r{in};
    skip_comment_block(r);
    std::string line;
    while (r.next(line)) {
        if (line.empty()) continue;
        dict.entries.insert(norm_word(line, r.line_no));
    }
    if (dict.entries.empty()) throw ValidationError("dictionary is empty");
    return dict;
}

std::vector<std::pair<std::string, std::string>> load_pairs(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> pairs;
    Reader r{in};
    skip_comment_block(r);
    std::string line;
    while (r.next(line)) {
        if (line.empty()) continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 2) throw ParseError("expected word<TAB>object", r.line_no);
        const std::string word = norm_word(fields[0], r.line_no);
        const std::string object = norm_word(fields[1], r.line_no);
        if (word.empty() || object.empty()) throw ValidationError("empty token", r.line_no);
        pairs.emplace_back(word, object);
    }
    return pairs;
}

void save_pairs(const std::vector<std::pair<std::string, std::string>>& pairs,
                std::ostream& out) {
    for (const auto& [word, object] : pairs) out << word << '\t' << object << '\n';
}

void write_comment_header(std::ostream& out,
                          const std::vector<std::pair<std::string, std::string>>& kv) {
    for (const auto& [key, value] : kv) out << "# " << key << '=' << value << '\n';
}

std::vector<std::pair<std::string, std::string>> read_comment_header(std::istream& in) {
    Reader r{in};
    return skip_comment_block(r);
}

}  // namespace visrank
