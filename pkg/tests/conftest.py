import pytest
from hypothesis import settings

from kummerfib import GramMatrix, PolarizedSurface

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# Even lattices of signature (1, rho - 1) with a positive class, rho = 1..4.
SAMPLE_SURFACES = {
    "principal": ("2", (1,)),
    "polarization_1_2": ("4", (1,)),
    "rho2_hyperbolic": ("0,1;1,0", (1, 1)),
    "rho2_det-5": ("2,1;1,-2", (1, 0)),
    "rho2_diag": ("4,0;0,-2", (1, 0)),
    "rho3": ("2,0,0;0,-2,1;0,1,-2", (1, 0, 0)),
    "rho4": ("2,1,0,0;1,-2,0,0;0,0,-2,1;0,0,1,-2", (1, 0, 0, 0)),
    "rho4_U+A1A1": ("0,1,0,0;1,0,0,0;0,0,-2,0;0,0,0,-4", (1, 1, 0, 0)),
}


def make_surface(name):
    gram, h = SAMPLE_SURFACES[name]
    return PolarizedSurface(GramMatrix.parse(gram), h)


@pytest.fixture(params=sorted(SAMPLE_SURFACES))
def surface(request):
    return make_surface(request.param)
