"""Resource caps and numeric tolerances, optionally overridden from a JSON file."""

import json
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Config:
    # largest number of cells base**level a b-sequence / cascade may allocate
    cell_cap: int = 2**24
    # |probe| below this counts as a vanishing Fourier coefficient
    vanish_tol: float = 1e-8
    # |probe| above this counts as visibly nonzero
    visible_tol: float = 1e-2
    # carry-automaton states explored before giving up (guards huge digits)
    state_cap: int = 10**7


DEFAULT = Config()


def load_config(path=None):
    if path is None:
        return DEFAULT
    with open(path) as fh:
        data = json.load(fh)
    known = {f.name for f in fields(Config)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return replace(DEFAULT, **data)
