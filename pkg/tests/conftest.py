import sys
from pathlib import Path

from hypothesis import strategies as st

from lamstd.terms import App, Lam, Substitution, Var

sys.path.insert(0, str(Path(__file__).parent))

names = st.integers(min_value=0, max_value=4)

terms = st.recursive(
    st.builds(Var, names),
    lambda sub: st.one_of(st.builds(Lam, names, sub), st.builds(App, sub, sub)),
    max_leaves=8,
)

substitutions = st.dictionaries(names, terms, max_size=3).map(Substitution)


def pytest_configure(config):
    config.acceptance_results = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.acceptance_results
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
