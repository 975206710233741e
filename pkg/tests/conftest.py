import sympy
from hypothesis import strategies as st

from virfusion.exactalg import Scalar

t_sym = sympy.Symbol("t")


def to_sympy(s: Scalar, var=t_sym):
    num = sum(sympy.Integer(c) * var**k for k, c in enumerate(s.numerator_coeffs()))
    den = sum(sympy.Integer(c) * var**k for k, c in enumerate(s.denominator_coeffs()))
    return num / den


def sympy_equal(a, b) -> bool:
    return sympy.cancel(sympy.together(a - b)) == 0


small_ints = st.integers(min_value=-6, max_value=6)
coeff_lists = st.lists(small_ints, min_size=1, max_size=4)


@st.composite
def scalars(draw, nonzero=False):
    num = draw(coeff_lists)
    den = draw(coeff_lists.filter(lambda c: any(c)))
    s = Scalar(num, den)
    if nonzero and s.is_zero():
        s = Scalar(1)
    return s

from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=50)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
