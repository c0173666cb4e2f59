import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from morphspell.langdef import bundled_path, load_language  # noqa: E402
from morphspell.rootindex import build_index  # noqa: E402

ACCEPTANCE = []


@pytest.fixture(scope="session")
def turkish():
    return load_language("turkish-mini")


@pytest.fixture(scope="session")
def turkish_index(turkish):
    return build_index(turkish.roots, 2)


@pytest.fixture(scope="session")
def toy():
    return load_language("toy")


@pytest.fixture(scope="session")
def turkish_text():
    return bundled_path("turkish-mini").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def corpus_path():
    return Path(bundled_path("turkish-mini")).parent / "corpus_mini.tsv"


@pytest.fixture
def record_criterion():
    def record(number, title, passed, detail=""):
        ACCEPTANCE.append((number, title, passed, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE):
        line = f"[{'PASS' if passed else 'FAIL'}] {number:>2}. {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
