import io
from dataclasses import replace

import pytest

from morphspell.langdef import (
    LanguageDefinition, PackParseError, PackValidationError, Root, SurfaceRuleSet,
    dump_language, load_language, parse_language, validate,
)

MINIMAL = """\
[alphabet]
chars = ab
meta =
boundary = +
[states]
S start final
"""


def test_bundled_pack_loads(turkish):
    surfaces = {r.surface for r in turkish.roots}
    assert {"kalay", "kalayla", "kalas", "çalış", "çat", "çap", "çav"} <= surfaces
    assert [r.id for r in turkish.roots] == list(range(len(turkish.roots)))
    assert validate(turkish) == []


def test_same_surface_different_categories(turkish):
    cats = {r.category for r in turkish.roots if r.surface == "çat"}
    assert cats == {"noun", "verb"}


def test_empty_language():
    lang = load_language(io.StringIO(MINIMAL))
    assert lang.roots == () and lang.fsa.start == "S" and lang.fsa.is_final("S")


def test_reload_is_idempotent(turkish, toy):
    for lang in (turkish, toy):
        again = parse_language(dump_language(lang))
        assert again == lang
        assert dump_language(again) == dump_language(lang)


def test_unknown_state_in_transition():
    text = MINIMAL + "[transitions]\nS\tQ\tab\n"
    with pytest.raises(PackValidationError) as exc:
        load_language(io.StringIO(text))
    assert any("'Q'" in d for d in exc.value.diagnostics)


@pytest.mark.parametrize("text, line", [
    ("[alphabet]\nchars = ab\n[bogus]\n", 3),
    ("chars = ab\n", 1),
    ("[states]\nS\n[alphabet]\nchars = a\n", 3),
    ("[alphabet]\nchars = ab\n[roots]\nab ab noun\n", 4),
    ("[alphabet]\nchars = ab\n[boundary-deletions]\ndrop a before vowel\n", 4),
    ("[alphabet]\nchars = ab\n[error-stats]\nreplacement = lots\n", 4),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(PackParseError) as exc:
        parse_language(text)
    assert exc.value.lineno == line
    assert f"line {line}" in str(exc.value)


def test_duplicate_root_id(turkish):
    roots = list(turkish.roots)
    roots[1] = replace(roots[1], id=0)
    diags = validate(replace(turkish, roots=tuple(roots)))
    assert len(diags) == 1 and "duplicate ids" in diags[0]


def test_meta_without_resolution(turkish):
    rules = turkish.rules
    stripped = SurfaceRuleSet(
        tuple(r for r in rules.meta_resolutions if r.meta != "H"),
        tuple(d for d in rules.meta_defaults if d[0] != "H"),
        rules.boundary_deletions, rules.final_mutations, rules.mutable_final_chars)
    diags = validate(replace(turkish, rules=stripped))
    assert diags == ["meta character 'H' has no resolution rule"]


@pytest.mark.parametrize("mutate, fragment", [
    (lambda L: replace(L, alphabet=replace(L.alphabet, meta_chars="Aa")), "both surface and meta"),
    (lambda L: replace(L, alphabet=replace(L.alphabet, boundary_char="a")), "boundary"),
    (lambda L: replace(L, rules=replace(L.rules, mutable_final_chars="kQ")), "mutable-finals"),
    (lambda L: replace(L, special_pairs=L.special_pairs | {frozenset("aQ")}), "special pair"),
    (lambda L: replace(L, error_stats=replace(L.error_stats, deletion=-1.0)), "negative"),
    (lambda L: replace(L, roots=L.roots + (Root(len(L.roots), "çat", "çat", "noun", "N"),)), "duplicate root"),
    (lambda L: replace(L, roots=L.roots + (Root(len(L.roots), "xq", "xq", "noun", "N"),)), "not in alphabet"),
])
def test_validation_diagnostics(turkish, mutate, fragment):
    diags = validate(mutate(turkish))
    assert diags and any(fragment in d for d in diags), diags


def test_droppable_single_char_morpheme_rejected():
    text = MINIMAL.replace("chars = ab", "chars = ab").replace("meta =", "meta =") + (
        "[transitions]\nS\tS\ta\n[boundary-deletions]\ndrop a after vowel\n")
    diags = validate(parse_language(text))
    assert any("may realize as empty" in d for d in diags)


def test_root_lexical_must_realize_to_surface(turkish):
    roots = list(turkish.roots)
    roots[0] = replace(roots[0], lexical=roots[0].surface + "A")
    diags = validate(replace(turkish, roots=tuple(roots)))
    assert any("realizes as" in d for d in diags)


def test_definition_is_immutable(turkish):
    with pytest.raises(AttributeError):
        turkish.roots = ()
    assert isinstance(turkish, LanguageDefinition)


def test_load_from_path(tmp_path, turkish):
    p = tmp_path / "pack.lang"
    p.write_text(dump_language(turkish), encoding="utf-8")
    assert load_language(p) == turkish
    assert load_language(str(p)) == turkish
