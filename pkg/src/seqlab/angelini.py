"""Self-describing letter-difference sequences.

Spell the terms out, replace each letter by its alphabet rank, and the
absolute differences of successive ranks give back the terms.
"""
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import GenerationError


@dataclass(frozen=True)
class LanguageTable:
    rank: dict = field(default_factory=dict)   # letter -> rank
    names: dict = field(default_factory=dict)  # value -> normalized name

    def __post_init__(self):
        if len(set(self.rank.values())) != len(self.rank):
            raise ValueError("letter ranks must be distinct")
        for v, name in self.names.items():
            if not name:
                raise ValueError(f"empty name for {v}")
            missing = set(name) - set(self.rank)
            if missing:
                raise ValueError(f"name of {v} uses unranked letters {sorted(missing)}")

    def spelled(self, v):
        """Rank sequence of the name of ``v``."""
        try:
            name = self.names[v]
        except KeyError:
            raise GenerationError(f"name missing for value {v}") from None
        return [self.rank[c] for c in name]

    def restricted(self, values):
        return LanguageTable(self.rank, {v: self.names[v] for v in values if v in self.names})


def normalize_name(text):
    return "".join(c for c in text.lower() if c not in " -\t")


def parse_table(text):
    """Read ``rank <letter> <int>`` / ``name <int> <letters>`` records."""
    rank, names = {}, {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        kind, _, rest = line.partition(" ")
        try:
            key, _, value = rest.strip().partition(" ")
            if kind == "rank":
                rank[key.lower()] = int(value)
            elif kind == "name":
                names[int(key)] = normalize_name(value)
            else:
                raise ValueError(f"unknown record kind {kind!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return LanguageTable(rank, names)


def load_table(path):
    return parse_table(Path(path).read_text(encoding="utf-8"))


def dump_table(table):
    lines = [f"rank {c} {r}" for c, r in sorted(table.rank.items(), key=lambda kv: kv[1])]
    lines += [f"name {v} {name}" for v, name in sorted(table.names.items())]
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=1)
def english():
    text = resources.files("seqlab").joinpath("data/english.txt").read_text(encoding="utf-8")
    return parse_table(text)


def admissible_seeds(table=None):
    table = table or english()
    out = []
    for v, name in sorted(table.names.items()):
        if len(name) >= 2 and v == abs(table.rank[name[1]] - table.rank[name[0]]):
            out.append(v)
    return out


def generate(seed, k, table=None):
    """First ``k`` terms of the self-describing sequence starting at ``seed``."""
    table = table or english()
    if k < 1:
        raise ValueError("k must be at least 1")
    if seed not in admissible_seeds(table):
        raise GenerationError(f"inadmissible seed {seed}")
    terms = [seed]
    ranks = table.spelled(seed)
    spell = table.spelled
    # the first pair of letters reproduces the seed itself
    i = 1
    while len(terms) < k:
        if i + 1 >= len(ranks):
            raise GenerationError(f"letter stream stalls at term {i}")
        v = abs(ranks[i + 1] - ranks[i])
        terms.append(v)
        ranks.extend(spell(v))
        i += 1
    return terms


def verify_self_describing(terms, table=None):
    table = table or english()
    ranks = []
    for v in terms:
        if v not in table.names:
            return False
        ranks.extend(table.spelled(v))
    checked = min(len(terms), len(ranks) - 1)
    return all(terms[i] == abs(ranks[i + 1] - ranks[i]) for i in range(checked))


def frequencies(terms):
    if not terms:
        raise ValueError("frequencies of an empty sequence")
    total = len(terms)
    return {v: c / total for v, c in sorted(Counter(terms).items())}
