import pytest

from kicktop import SystemParams

# Shared small geometry used across the unit tests. The twist rate
# tau_eps * J / I = 3.06 matches the shipped figure configurations.
TAU = 3.06


@pytest.fixture
def small_params():
    return SystemParams(k=0.25, J=5, T=25, N0=25, I=5.0, tau_eps=TAU)


@pytest.fixture
def tiny_cfg_text():
    return (
        "[system]\n"
        "k = 0.25\n"
        "J = 5\n"
        "T = 25\n"
        "N0 = 25\n"
        "I = 5\n"
        "tau_eps = 3.06\n"
        "\n"
        "[classical]\n"
        "samples = 2000\n"
        "\n"
        "[run]\n"
        "kicks = 5\n"
        "seed = 1\n"
        "label = tiny\n"
    )


@pytest.fixture
def tiny_cfg(tmp_path, tiny_cfg_text):
    path = tmp_path / "tiny.cfg"
    path.write_text(tiny_cfg_text)
    return path
