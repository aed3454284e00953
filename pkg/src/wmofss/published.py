"""Published reference results for side-by-side comparison.

External constants transcribed from the original benchmark study of these
algorithms; they are printed next to locally measured numbers and are never
recomputed here. All values are IGD over 20 runs. MAIN_IGD and
SBX_COMPARISON_IGD hold (median, maximum, minimum) triples;
SBX_ABLATION_IGD holds (mean, standard deviation) pairs for the
operator-ablation study on the 5-objective multimodal instances.
"""

from __future__ import annotations

__all__ = [
    "ALGORITHMS_MAIN",
    "MAIN_IGD",
    "SBX_COMPARISON_IGD",
    "SBX_ABLATION_IGD",
]

ALGORITHMS_MAIN = ("wmofss", "nsga3", "maopso")

# (family, m) -> algorithm -> (median, maximum, minimum)
MAIN_IGD = {
    ("dtlz1", 3): {
        "wmofss": (3.63e-02, 7.27e-02, 1.66e-02),
        "nsga3": (1.51e-03, 1.74e-03, 1.37e-03),
        "maopso": (6.98e-04, 6.99e-04, 6.98e-04),
    },
    ("dtlz1", 5): {
        "wmofss": (1.85e-02, 2.27e-02, 9.78e-03),
        "nsga3": (1.59e-03, 1.88e-03, 1.50e-03),
        "maopso": (8.25e-04, 8.25e-04, 8.24e-04),
    },
    ("dtlz1", 10): {
        "wmofss": (1.22e-02, 2.32e-02, 8.21e-03),
        "nsga3": (1.42e-03, 2.62e-03, 1.38e-03),
        "maopso": (1.43e-03, 1.44e-03, 1.42e-03),
    },
    ("dtlz2", 3): {
        "wmofss": (4.44e-03, 4.67e-03, 4.24e-03),
        "nsga3": (3.77e-03, 4.11e-03, 3.55e-03),
        "maopso": (2.27e-03, 2.27e-03, 2.27e-03),
    },
    ("dtlz2", 5): {
        "wmofss": (4.71e-03, 4.80e-03, 4.62e-03),
        "nsga3": (1.45e-02, 1.53e-02, 1.10e-02),
        "maopso": (2.94e-03, 2.94e-03, 2.94e-03),
    },
    ("dtlz2", 10): {
        "wmofss": (6.07e-03, 6.13e-03, 5.97e-03),
        "nsga3": (1.23e-02, 1.25e-02, 9.93e-03),
        "maopso": (4.95e-03, 4.97e-03, 4.94e-03),
    },
    ("dtlz3", 3): {
        "wmofss": (1.04e00, 1.41e00, 5.29e-01),
        "nsga3": (3.89e-03, 4.36e-03, 3.52e-03),
        "maopso": (2.27e-03, 2.67e-01, 2.27e-03),
    },
    ("dtlz3", 5): {
        "wmofss": (4.67e-01, 5.72e-01, 3.12e-01),
        "nsga3": (1.47e-02, 1.91e-02, 4.88e-03),
        "maopso": (2.94e-03, 2.95e-03, 2.94e-03),
    },
    ("dtlz3", 10): {
        "wmofss": (1.69e-01, 2.66e-01, 8.83e-02),
        "nsga3": (1.20e-02, 1.36e-02, 6.45e-03),
        "maopso": (4.95e-03, 7.54e-03, 4.93e-03),
    },
    ("dtlz4", 3): {
        "wmofss": (8.21e-03, 9.29e-03, 7.54e-03),
        "nsga3": (3.80e-03, 4.14e-03, 3.60e-03),
        "maopso": (2.45e-03, 2.59e-03, 2.36e-03),
    },
    ("dtlz4", 5): {
        "wmofss": (6.15e-03, 6.58e-03, 5.86e-03),
        "nsga3": (5.00e-03, 5.24e-03, 4.83e-03),
        "maopso": (3.88e-03, 4.09e-03, 3.51e-03),
    },
    ("dtlz4", 10): {
        "wmofss": (6.33e-03, 6.50e-03, 6.22e-03),
        "nsga3": (5.10e-03, 5.20e-03, 5.02e-03),
        "maopso": (4.92e-03, 4.95e-03, 4.90e-03),
    },
}

# (family, m) -> algorithm -> (median, maximum, minimum). The wmofss column
# of this head-to-head table repeats MAIN_IGD except for the (dtlz3, 5)
# median, transcribed here exactly as printed in the source (2.18e-02,
# apparently a typo for MAIN_IGD's 4.67e-01).
SBX_COMPARISON_IGD = {
    ("dtlz1", 3): {
        "wmofss": (3.63e-02, 7.27e-02, 1.66e-02),
        "wmofss-sbx": (4.00e-03, 5.16e-03, 3.48e-03),
    },
    ("dtlz1", 5): {
        "wmofss": (1.85e-02, 2.27e-02, 9.78e-03),
        "wmofss-sbx": (3.28e-03, 3.37e-03, 3.21e-03),
    },
    ("dtlz1", 10): {
        "wmofss": (1.22e-02, 2.32e-02, 8.21e-03),
        "wmofss-sbx": (2.41e-03, 2.49e-03, 2.35e-03),
    },
    ("dtlz2", 3): {
        "wmofss": (4.44e-03, 4.67e-03, 4.24e-03),
        "wmofss-sbx": (8.44e-03, 9.34e-03, 6.79e-03),
    },
    ("dtlz2", 5): {
        "wmofss": (4.71e-03, 4.80e-03, 4.62e-03),
        "wmofss-sbx": (1.06e-02, 1.23e-02, 8.70e-03),
    },
    ("dtlz2", 10): {
        "wmofss": (6.07e-03, 6.13e-03, 5.97e-03),
        "wmofss-sbx": (9.95e-03, 1.05e-02, 8.94e-03),
    },
    ("dtlz3", 3): {
        "wmofss": (1.04e00, 1.41e00, 5.29e-01),
        "wmofss-sbx": (6.79e-02, 1.42e-01, 3.19e-02),
    },
    ("dtlz3", 5): {
        "wmofss": (2.18e-02, 5.72e-01, 3.12e-01),
        "wmofss-sbx": (2.18e-02, 3.93e-02, 1.63e-02),
    },
    ("dtlz3", 10): {
        "wmofss": (1.69e-01, 2.66e-01, 8.83e-02),
        "wmofss-sbx": (2.42e-02, 3.57e-02, 1.53e-02),
    },
    ("dtlz4", 3): {
        "wmofss": (8.21e-03, 9.29e-03, 7.54e-03),
        "wmofss-sbx": (2.33e-02, 2.76e-02, 1.37e-02),
    },
    ("dtlz4", 5): {
        "wmofss": (6.15e-03, 6.58e-03, 5.86e-03),
        "wmofss-sbx": (1.05e-02, 1.42e-02, 8.66e-03),
    },
    ("dtlz4", 10): {
        "wmofss": (6.33e-03, 6.50e-03, 6.22e-03),
        "wmofss-sbx": (9.31e-03, 1.03e-02, 8.26e-03),
    },
}

# (family, variant, theta) -> (mean, standard deviation), 5 objectives
SBX_ABLATION_IGD = {
    ("dtlz1", "sbx-a", 1): (3.25e-03, 2.57e-05),
    ("dtlz1", "sbx-a", 5): (3.55e-03, 2.42e-04),
    ("dtlz1", "sbx-b", 1): (3.27e-03, 3.87e-05),
    ("dtlz1", "sbx-b", 5): (3.73e-03, 3.00e-04),
    ("dtlz1", "sbx-c", 1): (7.11e-03, 2.36e-03),
    ("dtlz1", "sbx-c", 5): (1.36e-02, 6.28e-03),
    ("dtlz3", "sbx-a", 1): (1.81e-01, 2.09e-01),
    ("dtlz3", "sbx-a", 5): (2.50e-01, 2.76e-01),
    ("dtlz3", "sbx-b", 1): (2.33e-02, 5.19e-03),
    ("dtlz3", "sbx-b", 5): (2.53e-02, 7.12e-03),
    ("dtlz3", "sbx-c", 1): (2.41e00, 2.77e-01),
    ("dtlz3", "sbx-c", 5): (1.43e00, 5.69e-01),
}
