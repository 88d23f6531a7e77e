#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc and tests/fixtures/unicode/cases.jsonl.

The C++ normalizer (src/normalize.cpp) implements the standard NFC algorithm
(decompose, canonical reorder, compose) plus full case folding; this script
freezes the required Unicode data from Python's unicodedata module so the
library needs no ICU at build or run time.

Usage: python3 tools/gen_unicode_tables.py [repo_root]
"""

import json
import random
import sys
import unicodedata

HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172


def is_surrogate(cp):
    return 0xD800 <= cp <= 0xDFFF


def is_hangul_syllable(cp):
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def gather():
    ccc = []
    decomp = {}
    comp = []
    fold = {}
    for cp in range(0x110000):
        if is_surrogate(cp):
            continue
        ch = chr(cp)
        cls = unicodedata.combining(ch)
        if cls != 0:
            ccc.append((cp, cls))
        if not is_hangul_syllable(cp):
            nfd = unicodedata.normalize("NFD", ch)
            if nfd != ch:
                decomp[cp] = [ord(c) for c in nfd]
            raw = unicodedata.decomposition(ch)
            if raw and not raw.startswith("<"):
                parts = [int(p, 16) for p in raw.split()]
                # primary composite iff its NFD recomposes to it under NFC
                if len(parts) == 2 and unicodedata.normalize("NFC", nfd) == ch:
                    comp.append((parts[0], parts[1], cp))
        folded = ch.casefold()
        if folded != ch:
            fold[cp] = [ord(c) for c in folded]
    comp.sort()
    return ccc, decomp, comp, fold


def emit_pool_table(out, name, mapping):
    pool = []
    entries = []
    for cp in sorted(mapping):
        seq = mapping[cp]
        entries.append((cp, len(pool), len(seq)))
        pool.extend(seq)
    out.append(f"constexpr char32_t k{name}Pool[] = {{")
    for i in range(0, len(pool), 12):
        out.append("    " + ", ".join(f"0x{v:X}" for v in pool[i:i + 12]) + ",")
    out.append("};")
    out.append(f"constexpr SeqEntry k{name}[] = {{")
    for cp, off, ln in entries:
        out.append(f"    {{0x{cp:X}, {off}, {ln}}},")
    out.append("};")


def emit_tables(path, ccc, decomp, comp, fold):
    out = []
    out.append("// Generated by tools/gen_unicode_tables.py from Python "
               f"unicodedata {unicodedata.unidata_version}. Do not edit.")
    out.append("")
    out.append("struct CccEntry { char32_t cp; unsigned char ccc; };")
    out.append("struct SeqEntry { char32_t cp; std::uint32_t offset; std::uint8_t len; };")
    out.append("struct CompEntry { char32_t a; char32_t b; char32_t composite; };")
    out.append("")
    out.append("constexpr CccEntry kCcc[] = {")
    for cp, cls in ccc:
        out.append(f"    {{0x{cp:X}, {cls}}},")
    out.append("};")
    emit_pool_table(out, "Decomp", decomp)
    out.append("constexpr CompEntry kComp[] = {")
    for a, b, c in comp:
        out.append(f"    {{0x{a:X}, 0x{b:X}, 0x{c:X}}},")
    out.append("};")
    emit_pool_table(out, "Fold", fold)
    out.append("")
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(out))
    print(f"wrote {path}: ccc={len(ccc)} decomp={len(decomp)} "
          f"comp={len(comp)} fold={len(fold)}")


def fold_key(s):
    return unicodedata.normalize("NFC", unicodedata.normalize("NFC", s).casefold())


def emit_cases(path):
    cases = [
        "",
        "hello",
        "PAY",
        "café",
        "café",
        "Ą́",          # compose + reorder
        "q̣̇",          # canonical reordering of marks
        "ṩ",                 # s with dot below and dot above
        "ṩ",
        "ṩ",
        "ß",                 # sharp s folds to ss
        "STRASSE ß",
        "İstanbul",          # dotted capital I
        "Σςσ",     # sigma forms
        "각",                 # Hangul syllable
        "각",     # Hangul jamo composing to a syllable
        "가",           # LV only
        "ﬁnal",              # fi ligature (compat: NFC keeps, fold expands)
        "̈́",                 # excluded non-starter decomposition
        "Å",                 # angstrom sign -> A with ring
        "Ω",                 # ohm sign -> omega
        "naïve NAÏVE",
        "אָּ",     # hebrew with marks
        "ཱིུ",     # tibetan vowel reordering
        "x̨́̀y",
        "\U0001d160",             # musical symbol with canonical decomposition
        "ascii only 123 !?",
    ]
    rng = random.Random(20170903)
    pool = (
        list(range(0x20, 0x7F))
        + [0x00E9, 0x0301, 0x0300, 0x0323, 0x0307, 0x0328, 0x00DF, 0x0130,
           0x03A3, 0x03C2, 0x1E69, 0x212B, 0xAC00, 0xAC01, 0x1100, 0x1161,
           0x11A8, 0x0344, 0x0F71, 0x0F72, 0x00C5, 0x212A, 0x1E9E, 0xFB03]
    )
    for _ in range(250):
        n = rng.randint(1, 24)
        cases.append("".join(chr(rng.choice(pool)) for _ in range(n)))
    with open(path, "w", encoding="utf-8") as f:
        for s in cases:
            rec = [s, unicodedata.normalize("NFC", s), fold_key(s)]
            f.write(json.dumps(rec, ensure_ascii=True) + "\n")
    print(f"wrote {path}: {len(cases)} cases")


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else "."
    ccc, decomp, comp, fold = gather()
    emit_tables(f"{root}/src/unicode_tables.inc", ccc, decomp, comp, fold)
    emit_cases(f"{root}/tests/fixtures/unicode/cases.jsonl")


if __name__ == "__main__":
    main()
