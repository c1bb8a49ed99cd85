from pathlib import Path

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ROOT = Path(__file__).resolve().parent.parent
ROOTS_DIR = ROOT / "data" / "roots"

KUO = "(y^2-x^3)^2-x^7"
POSITIVE = "(y^2-x^3)^2-4*x^5*y-x^7"
G_EXAMPLE = "(y^3-x^5)^2-9*x^11"
TWIN_A = "y^2*(y-x^2)^2+x^11"
TWIN_B = "y^3*(y-x^2)+x^11"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
