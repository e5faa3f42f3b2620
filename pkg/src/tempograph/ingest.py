"""Edge-list parsing and dataset fetching.

``read_edgelist`` turns a delimited text file (optionally gzipped) of
(source, destination, timestamp) rows into an EventStream in a single
streaming pass.  ``fetch_dataset`` downloads a named dataset from the
manifest into a local cache with sha256 verification and per-dataset
locking, so concurrent fetches of the same name cannot corrupt the cache.
"""

from __future__ import annotations

import csv
import gzip
import hashlib
import io
import json
import os
import shutil
import tempfile
import urllib.error
import urllib.parse
import urllib.request
from array import array
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from pathlib import Path

import numpy as np
from filelock import FileLock

from ._datasets import MANIFEST_ENTRIES
from .core import EventStream, assemble_stream
from .errors import (
    ChecksumMismatch,
    EmptyInput,
    NetworkError,
    ParseError,
    UnknownDataset,
)

TIMESTAMP_UNITS = ("unix_seconds", "days", "years", "index")


@dataclass(frozen=True)
class EdgeListFormat:
    """Column layout of a delimited edge-list file.

    ``has_header=None`` auto-detects: the first non-comment row is a header
    iff its time column does not parse as an integer.
    """

    delimiter: str = ","
    has_header: bool | None = None
    col_src: int = 0
    col_dst: int = 1
    col_time: int = 2
    comment_prefix: str | None = "#"

    def __post_init__(self) -> None:
        if len(self.delimiter) != 1:
            raise ValueError("delimiter must be a single character")
        if len({self.col_src, self.col_dst, self.col_time}) != 3:
            raise ValueError("column indices must be distinct")
        if min(self.col_src, self.col_dst, self.col_time) < 0:
            raise ValueError("column indices must be non-negative")


def _parse_timestamp(text: str) -> int:
    """Integer timestamp; integral decimals like '5.0' are accepted,
    fractional values are rejected rather than floored."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        d = Decimal(text)
    except InvalidOperation:
        raise ValueError(f"timestamp {text!r} is not a number") from None
    if d != d.to_integral_value():
        raise ValueError(f"timestamp {text!r} is fractional")
    return int(d)


def _open_text(path: str | Path) -> io.TextIOWrapper:
    """Open a possibly-gzipped file as text, sniffing the gzip magic bytes."""
    raw = open(path, "rb")
    magic = raw.peek(2)[:2] if hasattr(raw, "peek") else b""
    if magic == b"\x1f\x8b":
        return io.TextIOWrapper(gzip.GzipFile(fileobj=raw), encoding="utf-8", newline="")
    return io.TextIOWrapper(raw, encoding="utf-8", newline="")


def read_edgelist(
    path: str | Path,
    fmt: EdgeListFormat | None = None,
    time_unit: str | None = None,
    undirected: bool = False,
) -> EventStream:
    """Parse a delimited edge-list file into an EventStream.

    Single-pass and streaming: memory is proportional to node and event
    counts, never to file size.  Malformed lines fail fast with a
    ParseError carrying the line number; nothing is silently skipped
    (except blank lines and comment lines).
    """
    fmt = fmt or EdgeListFormat()
    c_src, c_dst, c_time = fmt.col_src, fmt.col_dst, fmt.col_time
    prefix = fmt.comment_prefix
    need = max(c_src, c_dst, c_time) + 1
    ids: dict[str, int] = {}
    src_buf = array("q")
    dst_buf = array("q")
    time_buf = array("q")
    get_id = ids.setdefault
    push_src, push_dst, push_time = src_buf.append, dst_buf.append, time_buf.append
    header_resolved = fmt.has_header is False
    with _open_text(path) as handle:
        reader = csv.reader(handle, delimiter=fmt.delimiter)
        for row in reader:
            if not row or (len(row) == 1 and row[0].strip() == ""):
                continue
            if prefix and row[0].startswith(prefix):
                continue
            if not header_resolved:
                header_resolved = True
                if fmt.has_header is True:
                    continue
                # auto-detect: header iff the time column is not an integer
                try:
                    _parse_timestamp(row[c_time])
                except (ValueError, IndexError):
                    continue
            try:
                t = int(row[c_time])
            except (ValueError, IndexError):
                # slow path: integral decimals, malformed values, short rows
                if len(row) <= c_time:
                    raise ParseError(
                        reader.line_num, f"expected at least {need} fields, got {len(row)}"
                    ) from None
                try:
                    t = _parse_timestamp(row[c_time])
                except ValueError as exc:
                    raise ParseError(reader.line_num, str(exc)) from None
            if len(row) < need:
                raise ParseError(
                    reader.line_num, f"expected at least {need} fields, got {len(row)}"
                )
            a = get_id(row[c_src], len(ids))
            b = get_id(row[c_dst], len(ids))
            if undirected and b < a:
                a, b = b, a
            try:
                push_time(t)
            except OverflowError:
                raise ParseError(reader.line_num, f"timestamp {t} out of 64-bit range") from None
            push_src(a)
            push_dst(b)
    if not time_buf:
        raise EmptyInput(f"no data rows in {path}")
    return assemble_stream(
        np.frombuffer(src_buf, dtype=np.int64),
        np.frombuffer(dst_buf, dtype=np.int64),
        np.frombuffer(time_buf, dtype=np.int64),
        list(ids),
        time_unit=time_unit,
    )


@dataclass(frozen=True)
class DatasetEntry:
    name: str
    url: str | None = None
    sha256: str | None = None
    format: EdgeListFormat = field(default_factory=EdgeListFormat)
    timestamp_unit: str = "unix_seconds"
    expected: dict | None = None
    reference: dict | None = None
    group: str = "custom"
    domain: str = ""

    def __post_init__(self) -> None:
        if self.name != self.name.lower():
            raise ValueError(f"dataset names are lowercase, got {self.name!r}")
        if self.timestamp_unit not in TIMESTAMP_UNITS:
            raise ValueError(f"unknown timestamp unit {self.timestamp_unit!r}")


@dataclass(frozen=True)
class DatasetManifest:
    entries: tuple[DatasetEntry, ...]

    def __post_init__(self) -> None:
        names = [e.name for e in self.entries]
        if len(set(names)) != len(names):
            raise ValueError("dataset names must be unique")

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def get(self, name: str) -> DatasetEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise UnknownDataset(f"no dataset named {name!r}; see list_datasets()")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _entry_from_dict(raw: dict) -> DatasetEntry:
    fmt = EdgeListFormat(**raw.get("format") or {})
    known = {"name", "url", "sha256", "timestamp_unit", "expected", "reference", "group", "domain"}
    fields = {k: raw[k] for k in known if k in raw}
    return DatasetEntry(format=fmt, **fields)


_BUILTIN: DatasetManifest | None = None


def list_datasets() -> DatasetManifest:
    """The embedded manifest: 11 built-in plus 8 benchmark datasets."""
    global _BUILTIN
    if _BUILTIN is None:
        _BUILTIN = DatasetManifest(tuple(_entry_from_dict(e) for e in MANIFEST_ENTRIES))
    return _BUILTIN


def load_manifest(path: str | Path) -> DatasetManifest:
    """Read a manifest override from JSON (a list of entries or
    {"entries": [...]} with the same schema as the embedded manifest)."""
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if isinstance(data, dict):
        data = data["entries"]
    return DatasetManifest(tuple(_entry_from_dict(e) for e in data))


def default_cache_dir() -> Path:
    env = os.environ.get("TEMPOGRAPH_CACHE")
    if env:
        return Path(env).expanduser()
    return Path.home() / ".cache" / "tempograph"


def _sha256_file(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _download(url: str, dest: Path, timeout: float) -> None:
    try:
        with urllib.request.urlopen(url, timeout=timeout) as response, open(dest, "wb") as out:
            shutil.copyfileobj(response, out)
    except (urllib.error.URLError, OSError) as exc:
        dest.unlink(missing_ok=True)
        raise NetworkError(f"download of {url} failed: {exc}") from None


def fetch_dataset(
    name: str,
    cache_dir: str | Path | None = None,
    manifest: DatasetManifest | None = None,
    timeout: float = 60.0,
) -> Path:
    """Return a verified local copy of a manifest dataset, downloading at
    most once.

    Cache layout: <cache_dir>/<name>/<sha256[:12]>/<original filename>.
    A pinned sha256 is always enforced; for unpinned entries the digest of
    the first successful download is recorded next to the cache and
    enforced from then on.  A per-dataset lock file serializes concurrent
    fetches of the same name.
    """
    manifest = manifest or list_datasets()
    entry = manifest.get(name)
    base = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    dataset_dir = base / entry.name
    dataset_dir.mkdir(parents=True, exist_ok=True)
    filename = Path(urllib.parse.urlparse(entry.url).path).name if entry.url else "data"
    filename = filename or "data"
    recorded_file = dataset_dir / "RECORDED_SHA256"

    with FileLock(str(base / f"{entry.name}.lock")):
        pinned = entry.sha256
        if pinned is None and recorded_file.exists():
            pinned = recorded_file.read_text(encoding="utf-8").strip() or None

        if pinned:
            cached = dataset_dir / pinned[:12] / filename
            if cached.exists():
                if _sha256_file(cached) == pinned:
                    return cached
                cached.unlink()  # corrupt cache entry: re-download below

        if not entry.url:
            raise NetworkError(
                f"no download URL pinned for dataset {entry.name!r}; "
                "supply a manifest override with url (and sha256)"
            )

        fd, tmp_name = tempfile.mkstemp(dir=dataset_dir, suffix=".part")
        os.close(fd)
        tmp = Path(tmp_name)
        try:
            _download(entry.url, tmp, timeout)
            digest = _sha256_file(tmp)
            if pinned and digest != pinned:
                raise ChecksumMismatch(
                    f"dataset {entry.name!r}: downloaded sha256 {digest} != expected {pinned}"
                )
            if pinned is None:
                recorded_file.write_text(digest + "\n", encoding="utf-8")
            target = dataset_dir / digest[:12] / filename
            target.parent.mkdir(parents=True, exist_ok=True)
            os.replace(tmp, target)
            return target
        finally:
            tmp.unlink(missing_ok=True)


def load_dataset(
    name: str,
    cache_dir: str | Path | None = None,
    manifest: DatasetManifest | None = None,
    undirected: bool = False,
) -> EventStream:
    """fetch_dataset followed by read_edgelist with the entry's format."""
    manifest = manifest or list_datasets()
    entry = manifest.get(name)
    path = fetch_dataset(name, cache_dir=cache_dir, manifest=manifest)
    return read_edgelist(path, fmt=entry.format, time_unit=entry.timestamp_unit, undirected=undirected)
