from ._belfl import (
    BelflError,
    Mass,
    count_total_preorders,
    entails,
    mel_valid,
    represent,
    run,
    truth_degree,
)

__all__ = [
    "BelflError",
    "Mass",
    "count_total_preorders",
    "entails",
    "mel_valid",
    "represent",
    "run",
    "truth_degree",
]
