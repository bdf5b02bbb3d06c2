import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES = []


def pytest_sessionfinish(session):
    if ACCEPTANCE_LINES:
        print("\n" + "\n".join(ACCEPTANCE_LINES))
