import pytest

from zomo import curves, kummer


@pytest.fixture(scope="session")
def x0_scaling_group():
    return curves.automorphism_group(curves.x0_scaling_maps(19),
                                     curves.x0_curve(), 19)


@pytest.fixture(scope="session")
def x0_full_group():
    maps = curves.x0_scaling_maps(19) + [curves.x0_alpha2()]
    return curves.automorphism_group(maps, curves.x0_curve(), 19)


@pytest.fixture(scope="session")
def fermat_group():
    return curves.automorphism_group(curves.fermat9_maps(19),
                                     curves.fermat9_curve(), 19)


@pytest.fixture(scope="session")
def genus28():
    return curves.genus28_group(19)


@pytest.fixture(scope="session")
def kummer19():
    return kummer.build_kummer(19, kummer.load_golden(19))


@pytest.fixture(scope="session")
def kummer73():
    return kummer.build_kummer(73, kummer.load_golden(73))


@pytest.fixture(scope="session")
def kummer271():
    return kummer.build_kummer(271, kummer.load_golden(271))
