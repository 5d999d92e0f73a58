"""
Unit tests for OEIS b-file parsing, comparison and the caching client.

Network access is never used unless EVENUP_WORDS_LIVE_OEIS is set; the
vendored snapshots and a mocked urlopen cover the client otherwise.
"""

import logging
import os
import urllib.error
from unittest.mock import patch

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evenup_words.engines.catalan.logic.catalan_words import (
    CatalanVariant,
    expand_catalan_gf,
)
from evenup_words.engines.genfunc.logic.rational_gf import build_gf, expand_gf
from evenup_words.shared_libs.oeis import (
    SNAPSHOT_DIR,
    BFileFormatError,
    ComparisonReport,
    MalformedIdError,
    NonConsecutiveIndexError,
    OeisClient,
    OeisError,
    OeisFetchError,
    OeisSequence,
    compare,
    default_cache_dir,
    parse_bfile,
    render_bfile,
    validate_id,
)
from evenup_words.shared_libs.words import WordClass

from conftest import (
    UNVENDORED_WORD_MATCHES,
    VENDORED_CATALAN_MATCHES,
    VENDORED_WORD_MATCHES,
)

LIVE = bool(os.environ.get("EVENUP_WORDS_LIVE_OEIS"))
requires_network = pytest.mark.skipif(
    not LIVE, reason="set EVENUP_WORDS_LIVE_OEIS=1 to fetch b-files from oeis.org"
)


def sequence(values, first_index=0, sequence_id="A000001"):
    return OeisSequence(sequence_id, {first_index + i: v for i, v in enumerate(values)})


class TestValidateId:
    """Test cases for identifier validation."""

    def test_well_formed(self):
        assert validate_id("A001333") == "A001333"

    @pytest.mark.parametrize("bad", ["1333", "A1333", "a001333", "A0013334", "A00133x", ""])
    def test_malformed(self, bad):
        with pytest.raises(MalformedIdError):
            validate_id(bad)

    def test_malformed_is_value_and_oeis_error(self):
        assert issubclass(MalformedIdError, ValueError)
        assert issubclass(MalformedIdError, OeisError)


class TestParseBFile:
    """Test cases for b-file parsing and rendering."""

    def test_comments_and_blank_lines(self):
        seq = parse_bfile("# header\n\n0 1\n1 1\n  2 2  \n", "A001006")
        assert seq.id == "A001006"
        assert seq.terms == {0: 1, 1: 1, 2: 2}
        assert seq.first_index == 0
        assert seq.values == [1, 1, 2]
        assert len(seq) == 3

    def test_negative_and_large_values(self):
        seq = parse_bfile("1 -3\n2 123456789012345678901234567890\n")
        assert seq.first_index == 1
        assert seq.terms[2] == 123456789012345678901234567890

    def test_wrong_field_count(self):
        with pytest.raises(BFileFormatError) as info:
            parse_bfile("0 1\n1 2 3\n")
        assert info.value.line_number == 2

    def test_non_integer(self):
        with pytest.raises(BFileFormatError, match="non-integer"):
            parse_bfile("0 one\n")

    def test_gap_in_indices(self):
        with pytest.raises(NonConsecutiveIndexError):
            parse_bfile("0 1\n2 1\n")

    def test_repeated_index(self):
        with pytest.raises(NonConsecutiveIndexError):
            parse_bfile("0 1\n0 1\n")

    def test_no_terms(self):
        with pytest.raises(BFileFormatError, match="no terms"):
            parse_bfile("# only a comment\n")

    def test_render_with_header(self):
        assert render_bfile([1, 3, 7], first_index=1, sequence_id="A001333") == (
            "# A001333\n1 1\n2 3\n3 7\n"
        )

    @given(
        values=st.lists(st.integers(min_value=-(10**30), max_value=10**30), min_size=1),
        first_index=st.integers(min_value=-5, max_value=5),
    )
    def test_render_then_parse(self, values, first_index):
        seq = parse_bfile(render_bfile(values, first_index, "A000001"))
        assert seq.values == values
        assert seq.first_index == first_index


class TestCompare:
    """Test cases for alignment search."""

    def test_identical(self):
        report = compare([1, 2, 3, 5, 8], sequence([1, 2, 3, 5, 8]))
        assert report.is_full_match
        assert report.alignment_offset == 0
        assert report.start == 0
        assert report.matched == 5

    def test_positive_offset(self):
        report = compare([1, 2, 3, 5, 8], sequence([0, 1, 1, 2, 3, 5, 8]))
        assert report.is_full_match
        assert report.alignment_offset == 2

    def test_negative_offset(self):
        report = compare([9, 1, 1, 2, 4, 9, 21], sequence([1, 1, 2, 4, 9, 21]))
        assert report.alignment_offset == -1
        assert report.is_full_match

    def test_leading_exemption(self):
        # the computed n = 0 and n = 1 terms follow a different convention
        report = compare([1, 4, 3, 4, 7, 11, 18], sequence([2, 1, 3, 4, 7, 11, 18]))
        assert report.is_full_match
        assert report.start == 2
        assert report.alignment_offset == 0

    def test_mismatch_reported(self):
        report = compare([1, 2, 3, 4], sequence([1, 2, 3, 5]), max_offset=0, max_skip=0)
        assert not report.is_full_match
        assert report.matched == 3
        assert report.first_mismatch == (3, 5, 4)
        assert "first mismatch: n=3 expected 5 got 4" in report.summary()

    def test_no_overlap_is_not_a_match(self):
        report = compare([1, 2], sequence([1, 2], first_index=100))
        assert report.matched == 0
        assert not report.is_full_match

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            compare([], sequence([1]))
        with pytest.raises(ValueError):
            compare([1], sequence([1]), max_offset=-1)

    def test_summary(self):
        report = ComparisonReport("A000045", matched=11, alignment_offset=2)
        text = report.summary()
        assert text.splitlines()[0] == "A000045: full match"
        assert "offset: +2" in text


class TestVendoredAttributions:
    """Published attributions checked against the vendored b-files."""

    def setup_method(self):
        self.client = OeisClient(cache_dir=SNAPSHOT_DIR / "missing", live=False)

    @pytest.mark.parametrize(
        "sequence_id,class_name,k,offset,start",
        VENDORED_WORD_MATCHES,
        ids=[f"{m[0]}-{m[1]}-k{m[2]}" for m in VENDORED_WORD_MATCHES],
    )
    def test_word_classes(self, sequence_id, class_name, k, offset, start):
        computed = expand_gf(build_gf(WordClass.from_name(class_name), k), 12)
        report = compare(computed, self.client.fetch(sequence_id))
        assert report.is_full_match
        assert report.alignment_offset == offset
        assert report.start == start
        assert report.matched >= 11

    @pytest.mark.parametrize(
        "sequence_id,variant,offset,start",
        VENDORED_CATALAN_MATCHES,
        ids=[f"{m[0]}-{m[1]}" for m in VENDORED_CATALAN_MATCHES],
    )
    def test_catalan_variants(self, sequence_id, variant, offset, start):
        computed = expand_catalan_gf(CatalanVariant.from_name(variant), 12)
        report = compare(computed, self.client.fetch(sequence_id))
        assert report.is_full_match
        assert report.alignment_offset == offset
        assert report.start == start
        assert report.matched >= 11

    def test_weak_family_is_twice_generalized_catalan(self):
        computed = expand_catalan_gf(CatalanVariant.from_name("weakly-even-up"), 12)
        halved = [1] + [c // 2 for c in computed[2:]]
        report = compare(halved, self.client.fetch("A025242"))
        assert all(c % 2 == 0 for c in computed[2:])
        assert report.is_full_match
        assert report.matched == 12


@pytest.mark.live
@requires_network
class TestLiveAttributions:
    """Attributions whose b-files are only available online."""

    def setup_method(self):
        self.client = OeisClient(live=True)

    @pytest.mark.parametrize("sequence_id,class_name,k", UNVENDORED_WORD_MATCHES)
    def test_word_classes(self, sequence_id, class_name, k):
        computed = expand_gf(build_gf(WordClass.from_name(class_name), k), 12)
        assert compare(computed, self.client.fetch(sequence_id)).is_full_match


class TestOeisClient:
    """Test cases for the cache-first client."""

    def setup_method(self):
        self.bfile = b"# A999999\n0 1\n1 2\n2 3\n"

    def test_default_cache_dir_env(self, monkeypatch, tmp_path):
        monkeypatch.setenv("OEIS_CACHE_DIR", str(tmp_path))
        assert default_cache_dir() == tmp_path
        monkeypatch.delenv("OEIS_CACHE_DIR")
        monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path / "xdg"))
        assert default_cache_dir() == tmp_path / "xdg" / "evenup-words" / "oeis"

    def test_bfile_url(self, tmp_path):
        client = OeisClient(cache_dir=tmp_path, base_url="https://example.org/")
        assert client.bfile_url("A001333") == "https://example.org/A001333/b001333.txt"

    def test_cache_takes_precedence(self, tmp_path):
        (tmp_path / "A001333.txt").write_text("0 42\n", encoding="utf-8")
        client = OeisClient(cache_dir=tmp_path)
        assert client.fetch("A001333").terms == {0: 42}

    def test_vendored_snapshot(self, tmp_path):
        seq = OeisClient(cache_dir=tmp_path).fetch("A001006")
        assert seq.values[:6] == [1, 1, 2, 4, 9, 21]

    def test_offline_miss(self, tmp_path):
        client = OeisClient(cache_dir=tmp_path, snapshot_dir=None)
        with pytest.raises(OeisFetchError, match="network access is disabled"):
            client.fetch("A001333")

    def test_malformed_id_checked_first(self, tmp_path):
        with pytest.raises(MalformedIdError):
            OeisClient(cache_dir=tmp_path, live=True).fetch("A12")

    @patch("evenup_words.shared_libs.oeis.urllib.request.urlopen")
    def test_live_download_is_cached(self, mock_urlopen, tmp_path):
        mock_urlopen.return_value.__enter__.return_value.read.return_value = self.bfile
        client = OeisClient(cache_dir=tmp_path, live=True)

        seq = client.fetch("A999999")

        assert seq.values == [1, 2, 3]
        assert (tmp_path / "A999999.txt").read_bytes() == self.bfile
        request = mock_urlopen.call_args[0][0]
        assert request.full_url == "https://oeis.org/A999999/b999999.txt"

        # the second lookup is served from the cache
        assert client.fetch("A999999") == seq
        assert mock_urlopen.call_count == 1

    @patch("evenup_words.shared_libs.oeis.urllib.request.urlopen")
    def test_network_failure(self, mock_urlopen, tmp_path):
        mock_urlopen.side_effect = urllib.error.URLError("unreachable")
        client = OeisClient(cache_dir=tmp_path, live=True)
        with pytest.raises(OeisFetchError, match="Failed to download"):
            client.fetch("A999999")
        assert not (tmp_path / "A999999.txt").exists()

    @patch("evenup_words.shared_libs.oeis.urllib.request.urlopen")
    def test_malformed_download(self, mock_urlopen, tmp_path):
        mock_urlopen.return_value.__enter__.return_value.read.return_value = b"<html>\n"
        client = OeisClient(cache_dir=tmp_path, live=True)
        with pytest.raises(BFileFormatError):
            client.fetch("A999999")

    @patch("evenup_words.shared_libs.oeis.urllib.request.urlopen")
    def test_unwritable_cache_only_warns(self, mock_urlopen, tmp_path, caplog):
        mock_urlopen.return_value.__enter__.return_value.read.return_value = self.bfile
        blocker = tmp_path / "not-a-directory"
        blocker.write_text("", encoding="utf-8")
        client = OeisClient(cache_dir=blocker, live=True)

        with caplog.at_level(logging.WARNING, logger="evenup_words.shared_libs.oeis"):
            seq = client.fetch("A999999")

        assert seq.values == [1, 2, 3]
        assert "Could not cache A999999" in caplog.text

    def test_undecodable_cache_file(self, tmp_path):
        (tmp_path / "A001333.txt").write_bytes(b"0 1\n1 \xff\xfe\n")
        client = OeisClient(cache_dir=tmp_path)
        with pytest.raises(BFileFormatError, match="not valid UTF-8"):
            client.fetch("A001333")

    @patch("evenup_words.shared_libs.oeis.urllib.request.urlopen")
    def test_undecodable_download_not_cached(self, mock_urlopen, tmp_path):
        mock_urlopen.return_value.__enter__.return_value.read.return_value = b"0 \x80\n"
        client = OeisClient(cache_dir=tmp_path, live=True)
        with pytest.raises(BFileFormatError, match="A999999 is not valid UTF-8"):
            client.fetch("A999999")
        assert list(tmp_path.iterdir()) == []

    @patch("evenup_words.shared_libs.oeis.urllib.request.urlopen")
    def test_failed_rename_removes_temporary_file(self, mock_urlopen, tmp_path, caplog):
        mock_urlopen.return_value.__enter__.return_value.read.return_value = self.bfile
        client = OeisClient(cache_dir=tmp_path, live=True)

        with patch("pathlib.Path.replace", side_effect=OSError("cross-device link")):
            with caplog.at_level(logging.WARNING, logger="evenup_words.shared_libs.oeis"):
                seq = client.fetch("A999999")

        assert seq.values == [1, 2, 3]
        assert "Could not cache A999999" in caplog.text
        assert list(tmp_path.iterdir()) == []

    def test_fetch_many(self, tmp_path):
        client = OeisClient(cache_dir=tmp_path)
        fetched = client.fetch_many(["A000045", "A000032", "A000045"])
        assert list(fetched) == ["A000045", "A000032"]
        assert fetched["A000032"].values[:4] == [2, 1, 3, 4]
