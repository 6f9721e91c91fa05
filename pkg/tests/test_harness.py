import functools
import http.server
import threading
import time
from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqlab import harness
from seqlab.digitgames import beastly_prefix
from seqlab.errors import BFileError, FetchError
from seqlab.harness import (CachePolicy, SequenceRecord, fetch_bfile, fixture_names,
                            load_bfile, load_fixture, parse_bfile, serialize_bfile, verify)
from seqlab.quet import quet_prefix

A094004_HEAD = [1, 4, 5, 8, 9, 14, 15, 66]


def test_parse_examples():
    r = parse_bfile("1 666\n2 1666\n", "A051003")
    assert (r.offset, r.terms) == (1, (666, 1666))
    r = parse_bfile("# comment\n0 2\n1 3\n", "A134204")
    assert (r.offset, r.terms) == (0, (2, 3))


def test_parse_crlf_blank_and_tabs():
    r = parse_bfile(b"# x\r\n\r\n5\t10\r\n6   -11\r\n", "A000001")
    assert (r.offset, r.terms) == (5, (10, -11))


@pytest.mark.parametrize("text, message", [
    ("1 666\n3 2666\n", "non-consecutive"),
    ("1 666 7\n", "malformed line"),
    ("1 six\n", "malformed line"),
    ("# only comments\n", "no data"),
])
def test_parse_errors(text, message):
    with pytest.raises(BFileError, match=message):
        parse_bfile(text, "A051003")


def test_record_validation():
    with pytest.raises(ValueError):
        SequenceRecord("B123456", 0, [1])
    with pytest.raises(ValueError):
        SequenceRecord("A12345", 0, [1])


def test_serializer_format():
    text = serialize_bfile(SequenceRecord("A000001", 3, [7, 8]))
    assert text == "3 7\n4 8\n"


def test_all_fixtures_round_trip(tmp_path):
    names = fixture_names()
    assert len(names) == 12
    for a in names:
        rec = load_fixture(a)
        assert rec.terms
        assert parse_bfile(serialize_bfile(rec), a) == rec
        path = tmp_path / f"b{a[1:]}.txt"
        path.write_text(serialize_bfile(rec))
        assert load_bfile(path, a) == rec


def test_missing_fixture():
    with pytest.raises(FetchError):
        load_fixture("A999999")


def test_verify_examples():
    rep = verify("A051003", beastly_prefix(14), load_fixture("A051003"))
    assert rep.status == "pass" and rep.compared == 14 and rep.first_mismatch is None
    assert verify("A134204", quet_prefix(24), load_fixture("A134204")).status == "pass"
    bad = beastly_prefix(14)
    bad[4] += 1
    rep = verify("A051003", bad, load_fixture("A051003"))
    assert rep.status == "fail"
    assert rep.first_mismatch == (5, load_fixture("A051003").terms[4], bad[4])
    assert rep.as_dict()["first_mismatch"]["index"] == 5


def test_verify_empty_overlap():
    with pytest.raises(ValueError, match="empty overlap"):
        verify("A051003", [], load_fixture("A051003"))


@settings(max_examples=60, deadline=None)
@given(a=st.sampled_from(["A090822", "A131744", "A057641"]), data=st.data())
def test_any_single_perturbation_fails(a, data):
    rec = load_fixture(a)
    i = data.draw(st.integers(0, len(rec.terms) - 1))
    delta = data.draw(st.integers(-5, 5).filter(bool))
    gen = list(rec.terms)
    gen[i] += delta
    rep = verify(a, gen, rec)
    assert rep.status == "fail" and rep.first_mismatch[0] == rec.offset + i


# --- fetching against a local server --------------------------------------


class _Handler(http.server.SimpleHTTPRequestHandler):
    hits = []

    def do_GET(self):
        self.hits.append(self.path)
        super().do_GET()

    def log_message(self, *args):
        pass


@pytest.fixture
def server(tmp_path):
    root = tmp_path / "site"
    (root / "A094004").mkdir(parents=True)
    (root / "A094004" / "b094004.txt").write_bytes(
        serialize_bfile(load_fixture("A094004")).replace("\n", "\r\n").encode())
    (root / "A000002").mkdir()
    (root / "A000002" / "b000002.txt").write_text("1 1\n3 2\n")
    _Handler.hits = []
    handler = functools.partial(_Handler, directory=str(root))
    srv = http.server.ThreadingHTTPServer(("127.0.0.1", 0), handler)
    t = threading.Thread(target=srv.serve_forever, daemon=True)
    t.start()
    yield f"http://127.0.0.1:{srv.server_address[1]}", _Handler.hits
    srv.shutdown()
    srv.server_close()


def test_fetch_then_cache_hit(server, tmp_path):
    url, hits = server
    policy = CachePolicy(base_url=url, cache_dir=tmp_path / "cache", allow_network=True)
    rec = fetch_bfile("A094004", policy)
    assert list(rec.terms[:8]) == A094004_HEAD and rec.offset == 1
    assert hits == ["/A094004/b094004.txt"]
    # raw bytes are kept as served
    assert b"\r\n" in (tmp_path / "cache" / "b094004.txt").read_bytes()
    offline = CachePolicy(base_url=url, cache_dir=tmp_path / "cache", offline=True)
    again = fetch_bfile("A094004", offline)
    assert again == rec == fetch_bfile("A094004", offline)
    assert len(hits) == 1


def test_offline_miss(tmp_path):
    policy = CachePolicy(cache_dir=tmp_path, offline=True, allow_network=True)
    with pytest.raises(FetchError, match="not in cache"):
        fetch_bfile("A999999", policy)


def test_network_disabled_by_default(tmp_path, monkeypatch):
    for var in (harness.ENV_ALLOW_NETWORK, harness.ENV_OFFLINE):
        monkeypatch.delenv(var, raising=False)
    monkeypatch.setenv(harness.ENV_CACHE_DIR, str(tmp_path))
    policy = CachePolicy.from_env()
    assert not policy.allow_network and policy.cache_dir == tmp_path
    with pytest.raises(FetchError, match="network disabled"):
        fetch_bfile("A090822", policy)


def test_env_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv(harness.ENV_BASE_URL, "http://example.invalid/")
    monkeypatch.setenv(harness.ENV_OFFLINE, "1")
    monkeypatch.setenv(harness.ENV_ALLOW_NETWORK, "yes")
    p = CachePolicy.from_env()
    assert p.base_url == "http://example.invalid" and p.offline and p.allow_network
    assert not CachePolicy.from_env(allow_network=False).allow_network


def test_single_flight(server, tmp_path):
    url, hits = server
    policy = CachePolicy(base_url=url, cache_dir=tmp_path / "c", allow_network=True)
    with ThreadPoolExecutor(8) as pool:
        recs = list(pool.map(lambda _: fetch_bfile("A094004", policy), range(8)))
    assert len(hits) == 1
    assert all(r == recs[0] for r in recs)


def test_http_failure_and_bad_payload(server, tmp_path):
    url, hits = server
    policy = CachePolicy(base_url=url, cache_dir=tmp_path / "c", allow_network=True)
    with pytest.raises(FetchError, match="HTTP failure"):
        fetch_bfile("A000001", policy)
    t0 = time.monotonic()
    with pytest.raises(BFileError):
        fetch_bfile("A000002", policy)
    # consecutive requests are at least a second apart
    assert time.monotonic() - t0 >= 0.95
    # nothing unparseable is cached
    assert not (tmp_path / "c" / "b000002.txt").exists()
