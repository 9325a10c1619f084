"""Reference tables for the four edge-case matrices C1..C4.

Per case: the four conditional rates and the five unit-scaled composites,
at 4 decimal places.  Tolerance when checking is one unit in the fourth
decimal.
"""

CASES = {
    "C1": (45, 995, 5, 8955),
    "C2": (8955, 5, 995, 45),
    "C3": (50, 9, 950, 8991),
    "C4": (8991, 950, 9, 50),
}

RATES = {
    "C1": {"prec": 0.0433, "rec": 0.9000, "spec": 0.9000, "npv": 0.9994},
    "C2": {"prec": 0.9994, "rec": 0.9000, "spec": 0.9000, "npv": 0.0433},
    "C3": {"prec": 0.8475, "rec": 0.0500, "spec": 0.9990, "npv": 0.9044},
    "C4": {"prec": 0.9044, "rec": 0.9990, "spec": 0.0500, "npv": 0.8475},
}

COMPOSITES = {
    "C1": {"p4": 0.1519, "f1": 0.0826, "mcc_scaled": 0.5924, "j_scaled": 0.9000, "mk_scaled": 0.5214},
    "C2": {"p4": 0.1519, "f1": 0.9471, "mcc_scaled": 0.5924, "j_scaled": 0.9000, "mk_scaled": 0.5214},
    "C3": {"p4": 0.1718, "f1": 0.0944, "mcc_scaled": 0.5960, "j_scaled": 0.5245, "mk_scaled": 0.8759},
    "C4": {"p4": 0.1718, "f1": 0.9494, "mcc_scaled": 0.5960, "j_scaled": 0.5245, "mk_scaled": 0.8759},
}


def matches_4dp(value: float, printed: float) -> bool:
    """True when `value` rounds to within one ulp of the printed 4-dp figure."""
    rounded = float(f"{value:.4f}")
    return abs(rounded - printed) <= 1e-4 + 1e-12
