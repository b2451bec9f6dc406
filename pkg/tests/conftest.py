import pytest

from agraded import AGradedContext, validate_grading
from agraded.fixtures import named_ideal, named_matrix


@pytest.fixture(scope="session")
def ctx12():
    return AGradedContext(named_matrix("g12"))


@pytest.fixture(scope="session")
def ctx137():
    return AGradedContext(named_matrix("g137"))


@pytest.fixture(scope="session")
def ctx134():
    return AGradedContext(named_matrix("g134"))


@pytest.fixture(scope="session")
def ctx345():
    return AGradedContext(named_matrix("g345-13-14"))


@pytest.fixture(scope="session")
def ctx_veronese():
    return AGradedContext(named_matrix("veronese6"))


@pytest.fixture(scope="session")
def ctx123789():
    return AGradedContext(named_matrix("g123789"))


@pytest.fixture(scope="session")
def ctx_corank4():
    return AGradedContext(named_matrix("g36-8-10-15"))


@pytest.fixture(scope="session")
def curve_ctx():
    from agraded import curve_rows

    return {j: AGradedContext(validate_grading(curve_rows(j))) for j in (1, 2, 3)}


@pytest.fixture(scope="session")
def ideal_J():
    return named_ideal("deficient-20")[1]


@pytest.fixture(scope="session")
def ideal_masked():
    return named_ideal("masked")[1]


@pytest.fixture(scope="session")
def ideal_corank4():
    return named_ideal("corank4")[1]
