"""Ground truth: bundled b-file fixtures, the OEIS b-file format, an
optional cached fetcher, and generator-vs-fixture comparison."""
import os
import re
import threading
import time
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import BFileError, FetchError

A_NUMBER = re.compile(r"^A\d{6}$")

ENV_BASE_URL = "SEQLAB_OEIS_URL"
ENV_CACHE_DIR = "SEQLAB_CACHE_DIR"
ENV_OFFLINE = "SEQLAB_OFFLINE"
ENV_ALLOW_NETWORK = "SEQLAB_ALLOW_NETWORK"
DEFAULT_BASE_URL = "https://oeis.org"
MIN_REQUEST_INTERVAL = 1.0


def _check_a_number(a_number):
    if not A_NUMBER.match(a_number):
        raise ValueError(f"not an A-number: {a_number!r}")


@dataclass(frozen=True)
class SequenceRecord:
    a_number: str
    offset: int
    terms: tuple

    def __post_init__(self):
        _check_a_number(self.a_number)
        object.__setattr__(self, "terms", tuple(self.terms))


@dataclass(frozen=True)
class VerificationReport:
    a_number: str
    compared: int
    first_mismatch: tuple | None  # (index, expected, actual)

    @property
    def status(self):
        return "pass" if self.first_mismatch is None and self.compared >= 1 else "fail"

    def as_dict(self):
        mm = None
        if self.first_mismatch is not None:
            i, exp, act = self.first_mismatch
            mm = {"index": i, "expected": exp, "actual": act}
        return {"a_number": self.a_number, "compared": self.compared,
                "first_mismatch": mm, "status": self.status}


# --- b-files --------------------------------------------------------------


def parse_bfile(text, a_number):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    offset = None
    terms = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 2:
            raise BFileError(f"malformed line {lineno}: {line!r}")
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(f"malformed line {lineno}: {line!r}") from None
        if offset is None:
            offset = index
        elif index != offset + len(terms):
            raise BFileError(f"non-consecutive index {index} at line {lineno}, "
                             f"expected {offset + len(terms)}")
        terms.append(value)
    if offset is None:
        raise BFileError(f"no data lines for {a_number}")
    return SequenceRecord(a_number, offset, terms)


def serialize_bfile(record):
    return "".join(f"{record.offset + i} {t}\n" for i, t in enumerate(record.terms))


def fixture_names():
    folder = resources.files("seqlab").joinpath("data/fixtures")
    return sorted("A" + p.name[1:7] for p in folder.iterdir() if p.name.startswith("b"))


def load_fixture(a_number):
    _check_a_number(a_number)
    path = resources.files("seqlab").joinpath(f"data/fixtures/b{a_number[1:]}.txt")
    if not path.is_file():
        raise FetchError(f"no bundled fixture for {a_number}")
    return parse_bfile(path.read_text(encoding="utf-8"), a_number)


def load_bfile(path, a_number):
    return parse_bfile(Path(path).read_text(encoding="utf-8"), a_number)


# --- verification ---------------------------------------------------------


def verify(a_number, generated, fixture):
    """Element-wise comparison of ``generated`` against ``fixture.terms``.

    ``generated[0]`` is taken to be the term at ``fixture.offset``.
    """
    overlap = min(len(generated), len(fixture.terms))
    if overlap == 0:
        raise ValueError(f"empty overlap verifying {a_number}")
    for i in range(overlap):
        if generated[i] != fixture.terms[i]:
            return VerificationReport(a_number, overlap,
                                      (fixture.offset + i, fixture.terms[i], generated[i]))
    return VerificationReport(a_number, overlap, None)


# --- remote fetch ---------------------------------------------------------


def _flag(name):
    return os.environ.get(name, "") not in ("", "0", "false", "no")


@dataclass(frozen=True)
class CachePolicy:
    base_url: str = DEFAULT_BASE_URL
    cache_dir: Path = field(default_factory=lambda: Path.home() / ".cache" / "seqlab")
    offline: bool = False
    allow_network: bool = False
    min_interval: float = MIN_REQUEST_INTERVAL
    timeout: float = 30.0

    @classmethod
    def from_env(cls, allow_network=None):
        kwargs = {}
        if os.environ.get(ENV_BASE_URL):
            kwargs["base_url"] = os.environ[ENV_BASE_URL].rstrip("/")
        if os.environ.get(ENV_CACHE_DIR):
            kwargs["cache_dir"] = Path(os.environ[ENV_CACHE_DIR])
        kwargs["offline"] = _flag(ENV_OFFLINE)
        kwargs["allow_network"] = _flag(ENV_ALLOW_NETWORK) if allow_network is None else allow_network
        return cls(**kwargs)


_locks_guard = threading.Lock()
_fetch_locks = {}
_rate_lock = threading.Lock()
_last_request = [0.0]
request_count = 0  # network requests issued by this process


def _lock_for(a_number):
    with _locks_guard:
        return _fetch_locks.setdefault(a_number, threading.Lock())


def _download(url, policy):
    global request_count
    with _rate_lock:
        wait = _last_request[0] + max(policy.min_interval, MIN_REQUEST_INTERVAL) - time.monotonic()
        if wait > 0:
            time.sleep(wait)
        try:
            req = urllib.request.Request(url, headers={"User-Agent": "seqlab b-file client"})
            with urllib.request.urlopen(req, timeout=policy.timeout) as resp:
                data = resp.read()
        except (urllib.error.URLError, OSError) as exc:
            raise FetchError(f"HTTP failure for {url}: {exc}") from None
        finally:
            _last_request[0] = time.monotonic()
            request_count += 1
    return data


def fetch_bfile(a_number, policy=None):
    """Parsed b-file for ``a_number``, from the cache or the configured server.

    Concurrent calls for the same A-number share one download.
    """
    _check_a_number(a_number)
    policy = policy or CachePolicy.from_env()
    cached = Path(policy.cache_dir) / f"b{a_number[1:]}.txt"
    with _lock_for(a_number):
        if cached.is_file():
            return parse_bfile(cached.read_bytes(), a_number)
        if policy.offline:
            raise FetchError(f"{a_number} not in cache (offline)")
        if not policy.allow_network:
            raise FetchError(f"network disabled; {a_number} not in cache")
        url = f"{policy.base_url.rstrip('/')}/{a_number}/b{a_number[1:]}.txt"
        data = _download(url, policy)
        record = parse_bfile(data, a_number)
        cached.parent.mkdir(parents=True, exist_ok=True)
        tmp = cached.with_suffix(f".tmp{threading.get_ident()}")
        tmp.write_bytes(data)
        os.replace(tmp, cached)
        return record
