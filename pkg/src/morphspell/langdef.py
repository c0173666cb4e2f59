"""Language packs: alphabet, vowel classes, root lexicon, morphotactics
generator and surface rules, plus the text format they are stored in."""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, TextIO, Union

SECTIONS = (
    "alphabet",
    "vowel-classes",
    "meta-resolution",
    "roots",
    "states",
    "categories",
    "transitions",
    "boundary-deletions",
    "final-mutations",
    "mutable-finals",
    "special-pairs",
    "error-stats",
)

DEFAULT_ERROR_STATS = {
    "replacement": 23.1,
    "deletion": 22.2,
    "insertion": 17.3,
    "transposition": 3.3,
    "special_replacement_share": 34.0,
}

BUNDLED = {
    "turkish-mini": "turkish_mini.lang",
    "toy": "toy.lang",
}


class LanguagePackError(Exception):
    """Base class for language-pack problems."""


class PackParseError(LanguagePackError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class PackValidationError(LanguagePackError):
    def __init__(self, diagnostics: list[str]):
        super().__init__("invalid language pack:\n  " + "\n  ".join(diagnostics))
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class Alphabet:
    surface_chars: str
    meta_chars: str = ""
    boundary_char: str = "+"

    def __contains__(self, c: str) -> bool:
        return c in self.surface_chars


@dataclass(frozen=True)
class VowelClassTable:
    classes: tuple[tuple[str, str], ...] = ()

    def class_of(self, c: str) -> Optional[str]:
        for name, chars in self.classes:
            if c in chars:
                return name
        return None

    @property
    def vowels(self) -> frozenset:
        return frozenset(c for _, chars in self.classes for c in chars)

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.classes]


@dataclass(frozen=True)
class Root:
    id: int
    surface: str
    lexical: str
    category: str
    entry_state: str


@dataclass(frozen=True)
class Transition:
    source: str
    target: str
    morpheme: str


@dataclass(frozen=True)
class MorphotacticsFsa:
    states: tuple[str, ...]
    start: str
    finals: frozenset
    transitions: tuple[Transition, ...]
    _out: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        out: dict[str, list[Transition]] = {}
        for tr in self.transitions:
            out.setdefault(tr.source, []).append(tr)
        object.__setattr__(self, "_out", {k: tuple(v) for k, v in out.items()})

    def outgoing(self, state: str) -> tuple[Transition, ...]:
        return self._out.get(state, ())

    def is_final(self, state: str) -> bool:
        return state in self.finals


@dataclass(frozen=True)
class MetaResolution:
    meta: str
    vowel_class: str
    char: str


@dataclass(frozen=True)
class BoundaryDeletion:
    char: str
    context: str  # "consonant", "vowel" or "char:<c>"


@dataclass(frozen=True)
class FinalMutation:
    char: str
    replacement: str
    context: str


@dataclass(frozen=True)
class SurfaceRuleSet:
    meta_resolutions: tuple[MetaResolution, ...] = ()
    meta_defaults: tuple[tuple[str, str], ...] = ()
    boundary_deletions: tuple[BoundaryDeletion, ...] = ()
    final_mutations: tuple[FinalMutation, ...] = ()
    mutable_final_chars: str = ""

    def default_for(self, meta: str) -> Optional[str]:
        return dict(self.meta_defaults).get(meta)

    def resolve(self, meta: str, vowel_class: Optional[str]) -> Optional[str]:
        if vowel_class is not None:
            for rule in self.meta_resolutions:
                if rule.meta == meta and rule.vowel_class == vowel_class:
                    return rule.char
        return self.default_for(meta)


@dataclass(frozen=True)
class ErrorStats:
    replacement: float = DEFAULT_ERROR_STATS["replacement"]
    deletion: float = DEFAULT_ERROR_STATS["deletion"]
    insertion: float = DEFAULT_ERROR_STATS["insertion"]
    transposition: float = DEFAULT_ERROR_STATS["transposition"]
    special_replacement_share: float = DEFAULT_ERROR_STATS["special_replacement_share"]


@dataclass(frozen=True)
class LanguageDefinition:
    alphabet: Alphabet
    vowels: VowelClassTable
    roots: tuple[Root, ...]
    fsa: MorphotacticsFsa
    rules: SurfaceRuleSet
    categories: tuple[tuple[str, str], ...] = ()
    special_pairs: frozenset = frozenset()
    error_stats: ErrorStats = ErrorStats()

    def is_vowel(self, c: str) -> bool:
        """Vowel test used by rule contexts; a metacharacter counts as a
        vowel when every surface character it can resolve to is one."""
        vowels = self.vowels.vowels
        if c in vowels:
            return True
        if c in self.alphabet.meta_chars:
            targets = {r.char for r in self.rules.meta_resolutions if r.meta == c}
            default = self.rules.default_for(c)
            if default is not None:
                targets.add(default)
            return bool(targets) and targets <= vowels
        return False

    def is_special_pair(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.special_pairs


# ---------------------------------------------------------------- validation

def _context_ok(ctx: str) -> bool:
    return ctx in ("consonant", "vowel") or (ctx.startswith("char:") and len(ctx) == 6)


def validate(lang: LanguageDefinition) -> list[str]:
    """Return one diagnostic string per violated invariant (empty if valid)."""
    diags: list[str] = []
    ab = lang.alphabet
    surface, meta = set(ab.surface_chars), set(ab.meta_chars)
    if len(ab.surface_chars) != len(surface):
        diags.append("alphabet: duplicate surface characters")
    if surface & meta:
        diags.append(f"alphabet: characters both surface and meta: {''.join(sorted(surface & meta))}")
    if len(ab.boundary_char) != 1:
        diags.append(f"alphabet: boundary must be a single character, got {ab.boundary_char!r}")
    elif ab.boundary_char in surface | meta:
        diags.append(f"alphabet: boundary {ab.boundary_char!r} is also a surface/meta character")
    lexical_chars = surface | meta

    seen: dict[str, str] = {}
    for name, chars in lang.vowels.classes:
        for c in chars:
            if c not in surface:
                diags.append(f"vowel class {name}: {c!r} is not a surface character")
            if c in seen and seen[c] != name:
                diags.append(f"vowel class {name}: {c!r} already in class {seen[c]}")
            seen[c] = name
    class_names = set(lang.vowels.names)
    if len(class_names) != len(lang.vowels.classes):
        diags.append("vowel classes: duplicate class name")

    rules = lang.rules
    for r in rules.meta_resolutions:
        if r.meta not in meta:
            diags.append(f"meta-resolution: {r.meta!r} is not a meta character")
        if r.vowel_class not in class_names:
            diags.append(f"meta-resolution: unknown vowel class {r.vowel_class!r}")
        if r.char not in surface:
            diags.append(f"meta-resolution: target {r.char!r} is not a surface character")
    for m, c in rules.meta_defaults:
        if m not in meta:
            diags.append(f"meta-resolution: default for non-meta character {m!r}")
        if c not in surface:
            diags.append(f"meta-resolution: default target {c!r} is not a surface character")
    for m in ab.meta_chars:
        has_rule = any(r.meta == m for r in rules.meta_resolutions)
        has_default = rules.default_for(m) is not None
        if not has_rule and not has_default:
            diags.append(f"meta character {m!r} has no resolution rule")
        elif not has_default:
            diags.append(f"meta character {m!r} has no default resolution")
    for d in rules.boundary_deletions:
        if d.char not in lexical_chars:
            diags.append(f"boundary-deletion: {d.char!r} is not in the alphabet")
        if not _context_ok(d.context):
            diags.append(f"boundary-deletion: bad context {d.context!r}")
    for mu in rules.final_mutations:
        if mu.char not in surface or mu.replacement not in surface:
            diags.append(f"final-mutation: {mu.char!r} -> {mu.replacement!r} uses non-surface characters")
        if not _context_ok(mu.context):
            diags.append(f"final-mutation: bad context {mu.context!r}")
    for c in rules.mutable_final_chars:
        if c not in surface:
            diags.append(f"mutable-finals: {c!r} is not a surface character")

    fsa = lang.fsa
    states = set(fsa.states)
    if len(states) != len(fsa.states):
        diags.append("states: duplicate state name")
    if fsa.start not in states:
        diags.append(f"start state {fsa.start!r} is not declared")
    for f in sorted(fsa.finals - states):
        diags.append(f"final state {f!r} is not declared")
    deletable = {d.char for d in rules.boundary_deletions}
    for tr in fsa.transitions:
        for end in (tr.source, tr.target):
            if end not in states:
                diags.append(f"transition {tr.source}->{tr.target} ({tr.morpheme}): unknown state {end!r}")
        if not tr.morpheme:
            diags.append(f"transition {tr.source}->{tr.target}: empty morpheme")
        elif len(tr.morpheme) == 1 and tr.morpheme in deletable:
            diags.append(f"transition {tr.source}->{tr.target} ({tr.morpheme}): morpheme may realize as empty")
        bad = set(tr.morpheme) - lexical_chars
        if bad:
            diags.append(f"transition {tr.source}->{tr.target} ({tr.morpheme}): characters not in alphabet: {''.join(sorted(bad))}")

    categories = dict(lang.categories)
    if len(categories) != len(lang.categories):
        diags.append("categories: duplicate category")
    for cat, st in lang.categories:
        if st not in states:
            diags.append(f"category {cat}: unknown entry state {st!r}")

    ids = [r.id for r in lang.roots]
    if sorted(ids) != list(range(len(ids))):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        if dupes:
            diags.append(f"roots: duplicate ids {dupes}")
        else:
            diags.append("roots: ids are not 0..n-1")
    keys: set[tuple[str, str]] = set()
    for r in lang.roots:
        label = f"root {r.surface!r} ({r.category})"
        if not r.surface:
            diags.append(f"root #{r.id}: empty surface form")
        bad = set(r.surface) - surface
        if bad:
            diags.append(f"{label}: characters not in alphabet: {''.join(sorted(bad))}")
        if set(r.lexical) - lexical_chars:
            diags.append(f"{label}: lexical form {r.lexical!r} has characters outside the alphabet")
        if r.category not in categories:
            diags.append(f"{label}: unknown category")
        elif categories[r.category] != r.entry_state:
            diags.append(f"{label}: entry state {r.entry_state!r} disagrees with category")
        if r.entry_state not in states:
            diags.append(f"{label}: unknown entry state {r.entry_state!r}")
        if (r.surface, r.category) in keys:
            diags.append(f"{label}: duplicate root")
        keys.add((r.surface, r.category))

    for pair in lang.special_pairs:
        if len(pair) != 2 or not set(pair) <= surface:
            diags.append(f"special pair {''.join(sorted(pair))!r} is not two surface characters")

    for name in DEFAULT_ERROR_STATS:
        v = getattr(lang.error_stats, name)
        if v < 0:
            diags.append(f"error-stats: {name} is negative")
    if not diags:
        # only meaningful once the rules are known to be consistent
        from .surface import SurfaceError, surface as realize
        for r in lang.roots:
            try:
                s = realize(r.lexical, lang)
            except SurfaceError as exc:
                diags.append(f"root {r.surface!r} ({r.category}): {exc}")
                continue
            if s != r.surface:
                diags.append(f"root {r.surface!r} ({r.category}): lexical form realizes as {s!r}")
    return diags


# ---------------------------------------------------------------- loading

def _split_eq(line: str, key: str, lineno: int) -> str:
    name, sep, value = line.partition("=")
    if not sep or name.strip() != key:
        raise PackParseError(lineno, f"expected '{key} = ...'")
    return value.strip()


def _parse_context(text: str, lineno: int) -> str:
    text = text.strip()
    if not _context_ok(text):
        raise PackParseError(lineno, f"bad context {text!r} (consonant, vowel or char:<c>)")
    return text


def parse_language(source: Union[TextIO, str]) -> LanguageDefinition:
    """Parse a language pack without validating it."""
    if isinstance(source, str):
        source = io.StringIO(source)
    sections: dict[str, list[tuple[int, str]]] = {}
    current = None
    last_index = -1
    for lineno, raw in enumerate(source, 1):
        line = raw.rstrip("\n").rstrip("\r")
        if line.lstrip().startswith("#") or not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("[") and stripped.endswith("]"):
            name = stripped[1:-1].strip()
            if name not in SECTIONS:
                raise PackParseError(lineno, f"unknown section [{name}]")
            idx = SECTIONS.index(name)
            if idx <= last_index:
                raise PackParseError(lineno, f"section [{name}] out of order or repeated")
            last_index = idx
            current = name
            sections[name] = []
            continue
        if current is None:
            raise PackParseError(lineno, "content before first section header")
        # tab-separated sections keep their whitespace structure
        sections[current].append((lineno, line if current in ("roots", "transitions") else stripped))

    if "alphabet" not in sections:
        raise PackParseError(1, "missing [alphabet] section")
    fields = {}
    for lineno, line in sections["alphabet"]:
        key = line.partition("=")[0].strip()
        if key not in ("chars", "meta", "boundary"):
            raise PackParseError(lineno, f"unknown alphabet key {key!r}")
        fields[key] = _split_eq(line, key, lineno)
    if "chars" not in fields:
        raise PackParseError(1, "[alphabet] needs a 'chars' line")
    alphabet = Alphabet(fields["chars"], fields.get("meta", ""), fields.get("boundary", "+"))

    classes = []
    for lineno, line in sections.get("vowel-classes", []):
        head, sep, chars = line.partition("=")
        words = head.split()
        if not sep or len(words) != 2 or words[0] != "class":
            raise PackParseError(lineno, "expected 'class <name> = <chars>'")
        classes.append((words[1], chars.strip()))
    vowels = VowelClassTable(tuple(classes))

    resolutions, defaults = [], []
    for lineno, line in sections.get("meta-resolution", []):
        lhs, sep, rhs = line.partition("->")
        words, rhs = lhs.split(), rhs.strip()
        if not sep or len(words) != 2 or len(rhs) != 1:
            raise PackParseError(lineno, "expected '<meta> <class> -> <char>' or 'default <meta> -> <char>'")
        if words[0] == "default":
            defaults.append((words[1], rhs))
        else:
            resolutions.append(MetaResolution(words[0], words[1], rhs))

    states, finals, start = [], set(), None
    for lineno, line in sections.get("states", []):
        words = line.split()
        flags = words[1:]
        if not words or any(f not in ("final", "start") for f in flags):
            raise PackParseError(lineno, "expected '<name>' optionally followed by 'start' and/or 'final'")
        states.append(words[0])
        if "final" in flags:
            finals.add(words[0])
        if "start" in flags:
            if start is not None:
                raise PackParseError(lineno, "more than one start state")
            start = words[0]
    if start is None:
        start = states[0] if states else ""

    categories = []
    for lineno, line in sections.get("categories", []):
        lhs, sep, rhs = line.partition("->")
        if not sep or not lhs.strip() or not rhs.strip():
            raise PackParseError(lineno, "expected '<category> -> <entry_state>'")
        categories.append((lhs.strip(), rhs.strip()))
    cat_map = dict(categories)

    roots = []
    for lineno, line in sections.get("roots", []):
        parts = line.strip().split("\t")
        if len(parts) != 3:
            raise PackParseError(lineno, "expected 'surface<TAB>lexical<TAB>category'")
        surf, lex, cat = (p.strip() for p in parts)
        roots.append(Root(len(roots), surf, lex, cat, cat_map.get(cat, "")))

    transitions = []
    for lineno, line in sections.get("transitions", []):
        parts = line.strip().split("\t")
        if len(parts) != 3:
            raise PackParseError(lineno, "expected 'from<TAB>to<TAB>morpheme'")
        transitions.append(Transition(*(p.strip() for p in parts)))

    deletions = []
    for lineno, line in sections.get("boundary-deletions", []):
        words = line.split(None, 3)
        if len(words) != 4 or words[0] != "drop" or words[2] != "after" or len(words[1]) != 1:
            raise PackParseError(lineno, "expected 'drop <char> after <context>'")
        deletions.append(BoundaryDeletion(words[1], _parse_context(words[3], lineno)))

    mutations = []
    for lineno, line in sections.get("final-mutations", []):
        words = line.split()
        if len(words) != 5 or words[1] != "->" or words[3] != "before" or len(words[0]) != 1 or len(words[2]) != 1:
            raise PackParseError(lineno, "expected '<char> -> <char> before <context>'")
        mutations.append(FinalMutation(words[0], words[2], _parse_context(words[4], lineno)))

    mutable = ""
    for lineno, line in sections.get("mutable-finals", []):
        mutable += _split_eq(line, "chars", lineno)

    pairs = set()
    for lineno, line in sections.get("special-pairs", []):
        words = line.split()
        if len(words) != 2 or len(words[0]) != 1 or len(words[1]) != 1:
            raise PackParseError(lineno, "expected '<char> <char>'")
        pairs.add(frozenset(words))

    stats = dict(DEFAULT_ERROR_STATS)
    for lineno, line in sections.get("error-stats", []):
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in stats:
            raise PackParseError(lineno, f"expected one of {', '.join(stats)} = <number>")
        try:
            stats[key] = float(value)
        except ValueError:
            raise PackParseError(lineno, f"not a number: {value.strip()!r}") from None

    return LanguageDefinition(
        alphabet=alphabet,
        vowels=vowels,
        roots=tuple(roots),
        fsa=MorphotacticsFsa(tuple(states), start, frozenset(finals), tuple(transitions)),
        rules=SurfaceRuleSet(tuple(resolutions), tuple(defaults), tuple(deletions),
                             tuple(mutations), mutable),
        categories=tuple(categories),
        special_pairs=frozenset(pairs),
        error_stats=ErrorStats(**stats),
    )


def load_language(source: Union[TextIO, str, Path]) -> LanguageDefinition:
    """Load and validate a language pack.

    ``source`` is an open text stream, a path, or the name of a bundled
    pack (``"turkish-mini"``, ``"toy"``).
    """
    if isinstance(source, (str, Path)):
        with open(_resolve_path(source), encoding="utf-8") as fh:
            lang = parse_language(fh)
    else:
        lang = parse_language(source)
    diags = validate(lang)
    if diags:
        raise PackValidationError(diags)
    return lang


def _resolve_path(source: Union[str, Path]) -> Path:
    if isinstance(source, str) and source in BUNDLED:
        return bundled_path(source)
    return Path(source)


def bundled_path(name: str) -> Path:
    return Path(__file__).parent / "data" / BUNDLED[name]


def _fmt_num(v: float) -> str:
    return repr(int(v)) if float(v).is_integer() else repr(v)


def dump_language(lang: LanguageDefinition) -> str:
    """Serialize ``lang`` in the pack format; ``parse_language`` inverts it."""
    out = ["[alphabet]",
           f"chars = {lang.alphabet.surface_chars}",
           f"meta = {lang.alphabet.meta_chars}",
           f"boundary = {lang.alphabet.boundary_char}",
           "", "[vowel-classes]"]
    out += [f"class {name} = {chars}" for name, chars in lang.vowels.classes]
    out += ["", "[meta-resolution]"]
    out += [f"{r.meta} {r.vowel_class} -> {r.char}" for r in lang.rules.meta_resolutions]
    out += [f"default {m} -> {c}" for m, c in lang.rules.meta_defaults]
    out += ["", "[roots]"]
    out += [f"{r.surface}\t{r.lexical}\t{r.category}" for r in lang.roots]
    out += ["", "[states]"]
    for s in lang.fsa.states:
        flags = (["start"] if s == lang.fsa.start else []) + (["final"] if s in lang.fsa.finals else [])
        out.append(" ".join([s, *flags]))
    out += ["", "[categories]"]
    out += [f"{c} -> {s}" for c, s in lang.categories]
    out += ["", "[transitions]"]
    out += [f"{t.source}\t{t.target}\t{t.morpheme}" for t in lang.fsa.transitions]
    out += ["", "[boundary-deletions]"]
    out += [f"drop {d.char} after {d.context}" for d in lang.rules.boundary_deletions]
    out += ["", "[final-mutations]"]
    out += [f"{m.char} -> {m.replacement} before {m.context}" for m in lang.rules.final_mutations]
    out += ["", "[mutable-finals]", f"chars = {lang.rules.mutable_final_chars}"]
    out += ["", "[special-pairs]"]
    out += [" ".join(sorted(p)) for p in sorted(lang.special_pairs, key=sorted)]
    out += ["", "[error-stats]"]
    out += [f"{k} = {_fmt_num(getattr(lang.error_stats, k))}" for k in DEFAULT_ERROR_STATS]
    return "\n".join(out) + "\n"
