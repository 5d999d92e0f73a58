"""
OEIS b-file access and sequence comparison.

B-files are fetched over HTTPS, cached on disk as the raw bytes received and
parsed into OeisSequence objects. A small set of truncated snapshots ships
with the package so that comparisons work offline; the network is only used
when the client is created with ``live=True``.
"""

import logging
import os
import re
import tempfile
import urllib.error
import urllib.request
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

DEFAULT_BASE_URL = "https://oeis.org"
SNAPSHOT_DIR = Path(__file__).parent / "data" / "bfiles"
_ID_PATTERN = re.compile(r"^A\d{6}$")


class OeisError(Exception):
    """Base exception for OEIS access and b-file handling."""

    pass


class MalformedIdError(OeisError, ValueError):
    """Exception raised for an identifier that is not 'A' plus six digits."""

    pass


class BFileFormatError(OeisError):
    """Exception raised for b-file text that cannot be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")


class NonConsecutiveIndexError(BFileFormatError):
    """Exception raised when b-file indices skip or repeat."""

    pass


class OeisFetchError(OeisError):
    """Exception raised when a b-file is neither cached nor downloadable."""

    pass


def _decode(raw: bytes, sequence_id: str) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise BFileFormatError(f"b-file for {sequence_id} is not valid UTF-8: {e}") from e


def validate_id(sequence_id: str) -> str:
    """Return the identifier unchanged if it is well formed."""
    if not _ID_PATTERN.match(sequence_id):
        raise MalformedIdError(
            f"Malformed OEIS identifier '{sequence_id}'; expected 'A' followed by six digits"
        )
    return sequence_id


def default_cache_dir() -> Path:
    """$OEIS_CACHE_DIR, else the per-user cache directory."""
    configured = os.environ.get("OEIS_CACHE_DIR")
    if configured:
        return Path(configured)
    base = os.environ.get("XDG_CACHE_HOME")
    root = Path(base) if base else Path.home() / ".cache"
    return root / "evenup-words" / "oeis"


@dataclass(frozen=True)
class OeisSequence:
    """Terms of an OEIS sequence keyed by their OEIS index."""

    id: str
    terms: Dict[int, int] = field(default_factory=dict)

    @property
    def first_index(self) -> int:
        return min(self.terms) if self.terms else 0

    @property
    def values(self) -> List[int]:
        return [self.terms[i] for i in sorted(self.terms)]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class ComparisonReport:
    """
    Best alignment of a computed sequence against an OEIS sequence.

    ``alignment_offset`` d pairs computed[n] with terms[n + d]; the first
    ``start`` computed terms are exempt from comparison. ``first_mismatch``
    is (n, expected, got) with expected taken from OEIS.
    """

    sequence_id: str
    matched: int
    alignment_offset: int
    start: int = 0
    first_mismatch: Optional[Tuple[int, int, int]] = None

    @property
    def is_full_match(self) -> bool:
        return self.matched > 0 and self.first_mismatch is None

    def summary(self) -> str:
        status = "full match" if self.is_full_match else "mismatch"
        lines = [
            f"{self.sequence_id}: {status}",
            f"  offset: {self.alignment_offset:+d}",
            f"  compared from n={self.start}",
            f"  matched: {self.matched}",
        ]
        if self.first_mismatch is not None:
            n, expected, got = self.first_mismatch
            lines.append(f"  first mismatch: n={n} expected {expected} got {got}")
        return "\n".join(lines)


def parse_bfile(text: str, sequence_id: str = "A000000") -> OeisSequence:
    """
    Parse b-file text.

    Args:
        text: Lines of "index value"; blank lines and '#' comments are ignored
        sequence_id: Identifier recorded on the result

    Returns:
        OeisSequence with consecutive indices

    Raises:
        BFileFormatError: For a malformed line or a file without terms
        NonConsecutiveIndexError: If an index does not follow its predecessor
    """
    terms: Dict[int, int] = {}
    previous: Optional[int] = None
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileFormatError(f"expected 'index value', got {line!r}", line_number)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileFormatError(f"non-integer field in {line!r}", line_number)
        if previous is not None and index != previous + 1:
            raise NonConsecutiveIndexError(
                f"index {index} does not follow {previous}", line_number
            )
        terms[index] = value
        previous = index
    if not terms:
        raise BFileFormatError("b-file contains no terms")
    return OeisSequence(sequence_id, terms)


def render_bfile(
    values: Sequence[int], first_index: int = 0, sequence_id: Optional[str] = None
) -> str:
    """Render values as b-file text, optionally preceded by a '#' header."""
    lines = [f"# {sequence_id}"] if sequence_id else []
    lines.extend(f"{first_index + i} {v}" for i, v in enumerate(values))
    return "\n".join(lines) + "\n"


def _score_alignment(
    computed: Sequence[int], terms: Dict[int, int], offset: int, start: int
) -> Tuple[int, Optional[Tuple[int, int, int]]]:
    matched = 0
    for n in range(start, len(computed)):
        expected = terms.get(n + offset)
        if expected is None:
            continue
        if expected != computed[n]:
            return matched, (n, expected, computed[n])
        matched += 1
    return matched, None


def compare(
    computed: Sequence[int],
    seq: OeisSequence,
    max_offset: int = 5,
    max_skip: int = 2,
) -> ComparisonReport:
    """
    Align a computed sequence (starting at n = 0) with an OEIS sequence.

    Every offset in [-max_offset, max_offset] and every leading exemption
    of up to ``max_skip`` computed terms is tried. The alignment with the
    longest agreeing run wins; ties prefer a full match, then fewer exempt
    terms, then the offset closest to zero.
    """
    if not computed:
        raise ValueError("Nothing to compare: computed sequence is empty")
    if max_offset < 0 or max_skip < 0:
        raise ValueError("max_offset and max_skip must be non-negative")

    best: Optional[ComparisonReport] = None
    best_key: Optional[Tuple[int, bool, int, int, int]] = None
    for start in range(min(max_skip, len(computed) - 1) + 1):
        for offset in range(-max_offset, max_offset + 1):
            matched, mismatch = _score_alignment(computed, seq.terms, offset, start)
            key = (matched, mismatch is None, -start, -abs(offset), offset)
            if best_key is None or key > best_key:
                best_key = key
                best = ComparisonReport(seq.id, matched, offset, start, mismatch)
    assert best is not None
    logger.debug(
        f"Best alignment against {seq.id}: offset {best.alignment_offset}, "
        f"start {best.start}, matched {best.matched}"
    )
    return best


class OeisClient:
    """
    Cache-first b-file client.

    Lookup order is the on-disk cache, then the vendored snapshots, then
    the network when ``live`` is set.
    """

    def __init__(
        self,
        cache_dir: Optional[Path] = None,
        live: bool = False,
        base_url: str = DEFAULT_BASE_URL,
        timeout: float = 30.0,
        snapshot_dir: Optional[Path] = SNAPSHOT_DIR,
    ):
        """
        Initialize the client.

        Args:
            cache_dir: Directory for cached b-files (default: default_cache_dir())
            live: Allow network downloads
            base_url: OEIS server root
            timeout: Network timeout in seconds
            snapshot_dir: Directory of vendored b-files, or None to disable
        """
        self.cache_dir = Path(cache_dir) if cache_dir else default_cache_dir()
        self.live = live
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        self.snapshot_dir = snapshot_dir
        self.logger = logging.getLogger(__name__)

    def bfile_url(self, sequence_id: str) -> str:
        return f"{self.base_url}/{sequence_id}/b{sequence_id[1:]}.txt"

    def cached_path(self, sequence_id: str) -> Path:
        return self.cache_dir / f"{sequence_id}.txt"

    def fetch(self, sequence_id: str) -> OeisSequence:
        """
        Return the parsed b-file of a sequence.

        Raises:
            MalformedIdError: For a malformed identifier
            OeisFetchError: If the b-file is unavailable
            BFileFormatError: If the stored or downloaded text does not parse
        """
        validate_id(sequence_id)

        cached = self.cached_path(sequence_id)
        if cached.is_file():
            self.logger.info(f"Cache hit for {sequence_id}: {cached}")
            return parse_bfile(_decode(cached.read_bytes(), sequence_id), sequence_id)

        if self.snapshot_dir is not None:
            snapshot = self.snapshot_dir / f"{sequence_id}.txt"
            if snapshot.is_file():
                self.logger.info(f"Using vendored snapshot for {sequence_id}")
                return parse_bfile(_decode(snapshot.read_bytes(), sequence_id), sequence_id)

        if not self.live:
            raise OeisFetchError(
                f"{sequence_id} is not cached and network access is disabled "
                f"(enable live fetching to download it)"
            )

        raw = self._download(sequence_id)
        # undecodable downloads are not cached
        text = _decode(raw, sequence_id)
        self._store(sequence_id, raw)
        return parse_bfile(text, sequence_id)

    def fetch_many(
        self, sequence_ids: Iterable[str], max_workers: int = 4
    ) -> Dict[str, OeisSequence]:
        """Fetch several sequences concurrently; failures propagate."""
        ids = list(dict.fromkeys(sequence_ids))
        with ThreadPoolExecutor(max_workers=max(1, max_workers)) as pool:
            fetched = list(pool.map(self.fetch, ids))
        return dict(zip(ids, fetched))

    def _download(self, sequence_id: str) -> bytes:
        url = self.bfile_url(sequence_id)
        self.logger.info(f"Downloading {url}")
        request = urllib.request.Request(
            url, headers={"User-Agent": "evenup-words b-file client"}
        )
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as response:
                return response.read()
        except (urllib.error.URLError, TimeoutError, OSError) as e:
            raise OeisFetchError(f"Failed to download {url}: {e}") from e

    def _store(self, sequence_id: str, raw: bytes) -> None:
        temporary: Optional[Path] = None
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            with tempfile.NamedTemporaryFile(
                dir=self.cache_dir, prefix=f".{sequence_id}.", delete=False
            ) as handle:
                temporary = Path(handle.name)
                handle.write(raw)
            temporary.replace(self.cached_path(sequence_id))
            self.logger.debug(f"Cached {sequence_id} at {self.cached_path(sequence_id)}")
        except OSError as e:
            self.logger.warning(f"Could not cache {sequence_id}: {e}")
            if temporary is not None:
                temporary.unlink(missing_ok=True)
