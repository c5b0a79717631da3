"""Porter suffix-stripping stemmer.

Implements the classic 1980 algorithm directly from its step tables: five
steps applied in order, each step obeying at most one rule, and among a
step's rules the one with the longest matching suffix wins. If the winning
rule's measure condition fails the step changes nothing; no shorter suffix
is retried. The ABLI -> ABLE variant of step 2 is used.

Each step is a separate function so the published example words can be
checked one step at a time. ``stem`` chains them and leaves words of one or
two letters untouched.

Input is expected to be a lowercase token.
"""

from __future__ import annotations

from functools import lru_cache

_VOWELS = "aeiou"


def _is_consonant(word: str, i: int) -> bool:
    # y is a consonant at the start of the word or after a vowel
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _forms(stem: str) -> str:
    return "".join("c" if _is_consonant(stem, i) else "v" for i in range(len(stem)))


def _measure(stem: str) -> int:
    # m in the pattern [C](VC)^m[V] equals the number of vc transitions
    return _forms(stem).count("vc")


def _has_vowel(stem: str) -> bool:
    return "v" in _forms(stem)


def _ends_double_consonant(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _is_consonant(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    # the *o condition: final cvc where the last consonant is not w, x or y
    return (
        len(word) >= 3
        and _is_consonant(word, len(word) - 3)
        and not _is_consonant(word, len(word) - 2)
        and _is_consonant(word, len(word) - 1)
        and word[-1] not in "wxy"
    )


def _longest_rule(word, rules):
    for suffix, replacement in rules:
        if word.endswith(suffix):
            return suffix, replacement
    return None


def _sorted_rules(rules):
    return tuple(sorted(rules, key=lambda rule: len(rule[0]), reverse=True))


def step1a(word: str) -> str:
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("ies"):
        return word[:-2]
    if word.endswith("ss"):
        return word
    if word.endswith("s"):
        return word[:-1]
    return word


def _step1b_cleanup(stem: str) -> str:
    if stem.endswith(("at", "bl", "iz")):
        return stem + "e"
    if _ends_double_consonant(stem) and stem[-1] not in "lsz":
        return stem[:-1]
    if _measure(stem) == 1 and _ends_cvc(stem):
        return stem + "e"
    return stem


def step1b(word: str) -> str:
    if word.endswith("eed"):
        stem = word[:-1]
        return stem if _measure(word[:-3]) > 0 else word
    for suffix in ("ed", "ing"):
        if word.endswith(suffix):
            stem = word[: -len(suffix)]
            if _has_vowel(stem):
                return _step1b_cleanup(stem)
            return word
    return word


def step1c(word: str) -> str:
    if word.endswith("y") and _has_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


_STEP2_RULES = _sorted_rules([
    ("ational", "ate"),
    ("tional", "tion"),
    ("enci", "ence"),
    ("anci", "ance"),
    ("izer", "ize"),
    ("abli", "able"),
    ("alli", "al"),
    ("entli", "ent"),
    ("eli", "e"),
    ("ousli", "ous"),
    ("ization", "ize"),
    ("ation", "ate"),
    ("ator", "ate"),
    ("alism", "al"),
    ("iveness", "ive"),
    ("fulness", "ful"),
    ("ousness", "ous"),
    ("aliti", "al"),
    ("iviti", "ive"),
    ("biliti", "ble"),
])

_STEP3_RULES = _sorted_rules([
    ("icate", "ic"),
    ("ative", ""),
    ("alize", "al"),
    ("iciti", "ic"),
    ("ical", "ic"),
    ("ful", ""),
    ("ness", ""),
])

_STEP4_RULES = _sorted_rules([
    (suffix, "")
    for suffix in (
        "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
        "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
    )
])


def step2(word: str) -> str:
    hit = _longest_rule(word, _STEP2_RULES)
    if hit is None:
        return word
    suffix, replacement = hit
    stem = word[: -len(suffix)]
    return stem + replacement if _measure(stem) > 0 else word


def step3(word: str) -> str:
    hit = _longest_rule(word, _STEP3_RULES)
    if hit is None:
        return word
    suffix, replacement = hit
    stem = word[: -len(suffix)]
    return stem + replacement if _measure(stem) > 0 else word


def step4(word: str) -> str:
    hit = _longest_rule(word, _STEP4_RULES)
    if hit is None:
        return word
    suffix, _ = hit
    stem = word[: -len(suffix)]
    if _measure(stem) > 1 and (suffix != "ion" or stem.endswith(("s", "t"))):
        return stem
    return word


def step5a(word: str) -> str:
    if word.endswith("e"):
        stem = word[:-1]
        m = _measure(stem)
        if m > 1 or (m == 1 and not _ends_cvc(stem)):
            return stem
    return word


def step5b(word: str) -> str:
    if word.endswith("ll") and _measure(word) > 1:
        return word[:-1]
    return word


_STEPS = (step1a, step1b, step1c, step2, step3, step4, step5a, step5b)


@lru_cache(maxsize=None)
def stem(word: str) -> str:
    """Reduce one lowercase token to its stem."""
    if len(word) <= 2:
        return word
    for step in _STEPS:
        word = step(word)
    return word
