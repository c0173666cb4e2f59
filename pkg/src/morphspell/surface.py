"""Lexical-to-surface realization and word recognition."""
from __future__ import annotations

from .langdef import LanguageDefinition


class SurfaceError(ValueError):
    """Raised for malformed lexical strings or unresolvable metacharacters."""


def _matches(context: str, c: str, lang: LanguageDefinition) -> bool:
    if context == "vowel":
        return lang.is_vowel(c)
    if context == "consonant":
        return (c in lang.alphabet.surface_chars or c in lang.alphabet.meta_chars) and not lang.is_vowel(c)
    return context == "char:" + c


def _apply_deletions(body: str, left: str, lang: LanguageDefinition) -> str:
    # at most one character is dropped per boundary: the first rule that fires
    if not body:
        return body
    for rule in lang.rules.boundary_deletions:
        if body[0] == rule.char and _matches(rule.context, left, lang):
            return body[1:]
    return body


def _resolve(prefix: str, body: str, lang: LanguageDefinition, offset: int = 0) -> str:
    meta = lang.alphabet.meta_chars
    if not any(c in meta for c in body):
        return body
    vowels = lang.vowels
    realized = prefix
    for pos, c in enumerate(body):
        if c in meta:
            cls = None
            for prev in reversed(realized):
                cls = vowels.class_of(prev)
                if cls is not None:
                    break
            r = lang.rules.resolve(c, cls)
            if r is None:
                raise SurfaceError(f"cannot resolve metacharacter {c!r} at position {offset + pos}")
            c = r
        realized += c
    return realized[len(prefix):]


def append_morpheme(prefix: str, morpheme: str, lang: LanguageDefinition, offset: int = 0) -> str:
    """Surface form of ``prefix`` (already realized) followed by a new morpheme.

    At the boundary a final mutation may rewrite the last character of
    ``prefix`` (triggered by the first character the morpheme will keep),
    a boundary deletion may drop the morpheme's first character, and
    metacharacters then take the class of the last vowel to their left.
    """
    if not prefix:
        return _resolve("", morpheme, lang, offset)
    last = prefix[-1]
    kept = _apply_deletions(morpheme, last, lang)
    if kept:
        for mu in lang.rules.final_mutations:
            if last == mu.char and _matches(mu.context, kept[0], lang):
                prefix = prefix[:-1] + mu.replacement
                kept = _apply_deletions(morpheme, prefix[-1], lang)
                break
    return prefix + _resolve(prefix, kept, lang, offset + len(morpheme) - len(kept))


def split_lexical(lex: str, lang: LanguageDefinition) -> list[str]:
    b = lang.alphabet.boundary_char
    if not lex:
        return []
    parts = lex.split(b)
    if any(not p for p in parts):
        raise SurfaceError(f"malformed lexical string {lex!r}: empty morpheme")
    return parts


def surface(lex: str, lang: LanguageDefinition) -> str:
    """Realize a lexical string, e.g. ``ev+lAr+nHn`` -> ``evlerin``."""
    out = ""
    offset = 0
    for morpheme in split_lexical(lex, lang):
        out = append_morpheme(out, morpheme, lang, offset)
        offset += len(morpheme) + 1
    return out


def recognize(word: str, lang: LanguageDefinition) -> bool:
    """True iff some root plus morpheme path realizes exactly as ``word``."""
    from .corrector import analyze

    return bool(analyze(word, lang))
