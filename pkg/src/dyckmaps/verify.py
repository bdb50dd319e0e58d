"""Brute-force verification engine for the library's central claims.

Each function sweeps a word class exhaustively (or samples it) and checks
round trips, statistic transport, and distribution identities, returning a
:class:`VerificationReport`.  Counterexamples are lexicographically first
because enumeration is lexicographic and merging preserves stream order,
so failures are reproducible from (check name, word) alone.

The map arguments of the exhaustive engines are injectable so that a
deliberately broken map can be shown to produce a counterexample; the
defaults are the production maps.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from itertools import islice
from multiprocessing import Pool

import numpy as np

from .decompose import _crossing_factors
from .generate import (
    CATALAN_NUMBERS,
    CENTRAL_BINOMIALS,
    _balanced_texts,
    _dyck_texts,
    _random_balanced_text,
)
from .maps import (
    _alpha_text,
    _beta_text,
    _phi_ext_text,
    _phi_text,
    _psi_ext_text,
    _psi_text,
)
from .stats import _scan_text

_CHUNK = 4096


@dataclass
class CheckResult:
    """Outcome of one named check over one class and range of semilengths."""

    name: str
    path_class: str
    n_range: tuple
    words_tested: int
    passed: bool
    counterexample: str | None = None
    witness: str | None = None
    note: str = ""

    def format_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lo, hi = self.n_range
        line = (
            f"{status}  {self.name}  class={self.path_class} "
            f"n={lo}..{hi} words={self.words_tested}"
        )
        if self.counterexample is not None:
            line += f" counterexample={self.counterexample or '(empty)'}"
        if self.witness is not None:
            line += f" witness={self.witness}"
        if self.note:
            line += f" ({self.note})"
        return line


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def format_text(self) -> str:
        lines = [c.format_line() for c in self.checks]
        failed = sum(not c.passed for c in self.checks)
        lines.append(
            f"{len(self.checks)} checks, "
            + ("all passed" if not failed else f"{failed} FAILED")
        )
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "class": c.path_class,
                    "n_range": list(c.n_range),
                    "words_tested": c.words_tested,
                    "passed": c.passed,
                    "counterexample": c.counterexample,
                    "witness": c.witness,
                    "note": c.note,
                }
                for c in self.checks
            ],
        }


def _chunks(iterator, size):
    while True:
        block = list(islice(iterator, size))
        if not block:
            return
        yield block


def _map_chunks(worker, texts, jobs):
    """Apply worker to chunks, optionally across processes, preserving order."""
    if jobs <= 1:
        for block in _chunks(texts, _CHUNK):
            yield worker(block)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(worker, _chunks(texts, _CHUNK))


class _Failures(dict):
    """First counterexample per check name, in stream order."""

    def merge(self, other: dict) -> None:
        for name, word in other.items():
            self.setdefault(name, word)


# --- Dyck bijection -------------------------------------------------------

def _differs(fn, arg, expected) -> bool:
    """True when fn(arg) is not expected; a raise counts as a mismatch, so
    broken injected maps surface as counterexamples instead of crashes."""
    try:
        return fn(arg) != expected
    except Exception:
        return True


def _t1_chunk(texts, phi_fn, psi_fn):
    failures = {}
    joint_odd = Counter()
    joint_peaks = Counter()
    for text in texts:
        try:
            image = phi_fn(text)
        except Exception:
            image = None
        if image is None or _differs(psi_fn, image, text):
            failures.setdefault("dyck.round_trip.psi_after_phi", text)
        try:
            back = phi_fn(psi_fn(text))
        except Exception:
            back = None
        if back != text:
            failures.setdefault("dyck.round_trip.phi_after_psi", text)
        s = _scan_text(text)
        si = _scan_text(image) if image is not None else None
        if si is None or si.peaks != s.ups_odd:
            failures.setdefault("dyck.transport.peaks_from_ups_odd", text)
        if si is None or si.contacts != s.contacts:
            failures.setdefault("dyck.transport.contacts_preserved", text)
        joint_odd[(s.contacts, s.ups_odd)] += 1
        joint_peaks[(s.contacts, s.peaks)] += 1
    return len(texts), failures, joint_odd, joint_peaks


_T1_CHECKS = (
    "dyck.round_trip.psi_after_phi",
    "dyck.round_trip.phi_after_psi",
    "dyck.transport.peaks_from_ups_odd",
    "dyck.transport.contacts_preserved",
)


def verify_theorem1(
    max_n: int, *, phi_fn=None, psi_fn=None, jobs: int = 1
) -> VerificationReport:
    """Exhaustively check the Dyck bijection up to semilength max_n.

    Checks that psi inverts phi and vice versa, that phi sends the
    odd-height up-step count to the peak count while preserving contacts,
    and that the joint (contacts, ups_odd) and (contacts, peaks)
    distributions coincide at every semilength.
    """
    phi_fn = phi_fn or _phi_text
    psi_fn = psi_fn or _psi_text
    worker = partial(_t1_chunk, phi_fn=phi_fn, psi_fn=psi_fn)
    failures = _Failures()
    total = 0
    joint_note = ""
    joint_ok = True
    for n in range(max_n + 1):
        joint_odd = Counter()
        joint_peaks = Counter()
        count_n = 0
        for size, fails, c_odd, c_peaks in _map_chunks(worker, _dyck_texts(n), jobs):
            count_n += size
            failures.merge(fails)
            joint_odd.update(c_odd)
            joint_peaks.update(c_peaks)
        total += count_n
        if n < len(CATALAN_NUMBERS) and count_n != CATALAN_NUMBERS[n]:
            joint_ok = False
            joint_note = f"class size mismatch at n={n}: {count_n}"
        if joint_ok and joint_odd != joint_peaks:
            joint_ok = False
            diff = next(k for k in joint_odd.keys() | joint_peaks.keys()
                        if joint_odd[k] != joint_peaks[k])
            joint_note = f"joint distributions differ at n={n}, key={diff}"
    report = VerificationReport()
    rng = (0, max_n)
    for name in _T1_CHECKS:
        report.checks.append(
            CheckResult(name, "dyck", rng, total, name not in failures,
                        counterexample=failures.get(name))
        )
    report.checks.append(
        CheckResult("dyck.joint_distribution.contacts_x_stats", "dyck", rng,
                    total, joint_ok, note=joint_note)
    )
    return report


# --- bilateral bijection --------------------------------------------------

def _t2_chunk(texts, phi_ext_fn, psi_ext_fn, check_contacts):
    failures = {}
    dist_odd = Counter()
    dist_peaks = Counter()
    for text in texts:
        try:
            image = phi_ext_fn(text)
        except Exception:
            image = None
        if image is None or _differs(psi_ext_fn, image, text):
            failures.setdefault("bilateral.round_trip.psi_after_phi", text)
        try:
            back = phi_ext_fn(psi_ext_fn(text))
        except Exception:
            back = None
        if back != text:
            failures.setdefault("bilateral.round_trip.phi_after_psi", text)
        s = _scan_text(text)
        si = _scan_text(image) if image is not None else None
        if si is None or si.peaks != s.ups_odd:
            failures.setdefault("bilateral.transport.peaks_from_ups_odd", text)
        if si is None or si.crossings != s.crossings:
            failures.setdefault("bilateral.crossings_preserved", text)
        if image is None or _crossing_factors(text.encode()) != _crossing_factors(
            image.encode()
        ):
            failures.setdefault("bilateral.factor_structure_preserved", text)
        if check_contacts and (si is None or si.contacts != s.contacts):
            failures.setdefault("bilateral.contacts_preserved", text)
        dist_odd[s.ups_odd] += 1
        dist_peaks[s.peaks] += 1
    return len(texts), failures, dist_odd, dist_peaks


_T2_CHECKS = (
    "bilateral.round_trip.psi_after_phi",
    "bilateral.round_trip.phi_after_psi",
    "bilateral.transport.peaks_from_ups_odd",
    "bilateral.crossings_preserved",
    "bilateral.factor_structure_preserved",
)


def verify_theorem2(
    max_n: int,
    *,
    phi_ext_fn=None,
    psi_ext_fn=None,
    include_contact_preservation: bool = False,
    jobs: int = 1,
) -> VerificationReport:
    """Exhaustively check the bilateral bijection up to semilength max_n.

    Checks the round trips, the peaks / odd-height-up-steps transport, and
    preservation of the crossing count and of the whole crossing-factor
    structure; the peak and odd-up-step distributions are compared at every
    semilength.  ``include_contact_preservation`` adds a contact check that
    is expected to fail (the negative-factor conjugation moves contacts) and
    exists as a negative control.
    """
    phi_ext_fn = phi_ext_fn or _phi_ext_text
    psi_ext_fn = psi_ext_fn or _psi_ext_text
    worker = partial(
        _t2_chunk,
        phi_ext_fn=phi_ext_fn,
        psi_ext_fn=psi_ext_fn,
        check_contacts=include_contact_preservation,
    )
    failures = _Failures()
    total = 0
    dist_ok = True
    dist_note = ""
    for n in range(max_n + 1):
        dist_odd = Counter()
        dist_peaks = Counter()
        count_n = 0
        for size, fails, c_odd, c_peaks in _map_chunks(
            worker, _balanced_texts(n), jobs
        ):
            count_n += size
            failures.merge(fails)
            dist_odd.update(c_odd)
            dist_peaks.update(c_peaks)
        total += count_n
        if n < len(CENTRAL_BINOMIALS) and count_n != CENTRAL_BINOMIALS[n]:
            dist_ok = False
            dist_note = f"class size mismatch at n={n}: {count_n}"
        if dist_ok and dist_odd != dist_peaks:
            dist_ok = False
            diff = next(k for k in dist_odd.keys() | dist_peaks.keys()
                        if dist_odd[k] != dist_peaks[k])
            dist_note = f"distributions differ at n={n}, key={diff}"
    report = VerificationReport()
    rng = (0, max_n)
    names = _T2_CHECKS + (
        ("bilateral.contacts_preserved",) if include_contact_preservation else ()
    )
    for name in names:
        report.checks.append(
            CheckResult(name, "bilateral", rng, total, name not in failures,
                        counterexample=failures.get(name))
        )
    report.checks.append(
        CheckResult("bilateral.distribution.peaks_eq_ups_odd", "bilateral",
                    rng, total, dist_ok, note=dist_note)
    )
    return report


# --- involutions and their transports --------------------------------------

def verify_involutions_and_transport(
    max_n: int, *, include_beta_peak_preservation: bool = False
) -> VerificationReport:
    """Check that alpha and beta are involutions and transport statistics.

    alpha must swap peaks with valleys and odd-height up-steps with
    even-height down-steps over all balanced words; beta must shift one
    up-step from odd to even height over nonempty Dyck words.  A witness
    that beta changes the contact count is searched through semilength
    max(max_n, 3) and its existence is itself a check.
    ``include_beta_peak_preservation`` adds a peak-preservation check for
    beta that is expected to fail (beta does not preserve peak count).
    """
    failures = _Failures()
    bilateral_total = 0
    for n in range(max_n + 1):
        for text in _balanced_texts(n):
            bilateral_total += 1
            refl = _alpha_text(text)
            if _alpha_text(refl) != text:
                failures.setdefault("alpha.involution", text)
            s = _scan_text(text)
            sr = _scan_text(refl)
            if sr.peaks != s.valleys or sr.valleys != s.peaks:
                failures.setdefault("alpha.transport.peak_valley_swap", text)
            downs_even = (len(text) - s.ups) - s.downs_odd
            if sr.ups_odd != downs_even:
                failures.setdefault("alpha.transport.parity_swap", text)
    dyck_total = 0
    for n in range(max_n + 1):
        for text in _dyck_texts(n):
            dyck_total += 1
            if not text:
                continue
            swapped = _beta_text(text)
            if _beta_text(swapped) != text:
                failures.setdefault("beta.involution", text)
            s = _scan_text(text)
            sb = _scan_text(swapped)
            if (sb.ups - sb.ups_odd) != s.ups_odd - 1:
                failures.setdefault("beta.transport.odd_to_even_shift", text)
            if include_beta_peak_preservation and sb.peaks != s.peaks:
                failures.setdefault("beta.transport.peaks_preserved", text)
    witness = None
    for n in range(max(max_n, 3) + 1):
        for text in _dyck_texts(n):
            if text and _scan_text(_beta_text(text)).contacts != _scan_text(text).contacts:
                witness = text
                break
        if witness:
            break
    report = VerificationReport()
    rng = (0, max_n)
    for name in ("alpha.involution", "alpha.transport.peak_valley_swap",
                 "alpha.transport.parity_swap"):
        report.checks.append(
            CheckResult(name, "bilateral", rng, bilateral_total,
                        name not in failures, counterexample=failures.get(name))
        )
    beta_names = ["beta.involution", "beta.transport.odd_to_even_shift"]
    if include_beta_peak_preservation:
        beta_names.append("beta.transport.peaks_preserved")
    for name in beta_names:
        report.checks.append(
            CheckResult(name, "dyck", rng, dyck_total, name not in failures,
                        counterexample=failures.get(name))
        )
    report.checks.append(
        CheckResult("beta.contact_change_witness", "dyck", (0, max(max_n, 3)),
                    dyck_total, witness is not None, witness=witness)
    )
    return report


# --- randomized / performance ----------------------------------------------

def _time_map(fn, texts, repeats: int = 2) -> float:
    best = None
    for _ in range(repeats):
        start = time.perf_counter()
        for text in texts:
            fn(text)
        elapsed = time.perf_counter() - start
        if best is None or elapsed < best:
            best = elapsed
    return best


def verify_randomized(
    n: int, trials: int, seed: int, *, check_scaling: bool = True
) -> VerificationReport:
    """Round trips and transport on uniform random balanced words.

    Samples ``trials`` words of semilength ``n``; additionally times the
    forward map on words of semilength 2n and checks that total cost grew
    by at most 2.5x (linear scaling), unless the sample is too small for
    timing to mean anything (n < 64 or trials < 2).
    """
    rng = np.random.default_rng(seed)
    texts = [_random_balanced_text(n, rng) for _ in range(trials)]
    failures = _Failures()
    for text in texts:
        image = _phi_ext_text(text)
        if _psi_ext_text(image) != text:
            failures.setdefault("random.round_trip.psi_after_phi", text)
        if _phi_ext_text(_psi_ext_text(text)) != text:
            failures.setdefault("random.round_trip.phi_after_psi", text)
        if _scan_text(image).peaks != _scan_text(text).ups_odd:
            failures.setdefault("random.transport.peaks_from_ups_odd", text)
    report = VerificationReport()
    rng_range = (n, n)
    for name in ("random.round_trip.psi_after_phi",
                 "random.round_trip.phi_after_psi",
                 "random.transport.peaks_from_ups_odd"):
        report.checks.append(
            CheckResult(name, "bilateral", rng_range, trials,
                        name not in failures, counterexample=failures.get(name))
        )
    if check_scaling and n >= 64 and trials >= 2:
        doubled = [_random_balanced_text(2 * n, rng) for _ in range(trials)]
        t_base = _time_map(_phi_ext_text, texts)
        t_doubled = _time_map(_phi_ext_text, doubled)
        ratio = t_doubled / t_base if t_base > 0 else float("inf")
        report.checks.append(
            CheckResult("random.linear_scaling", "bilateral", (n, 2 * n),
                        2 * trials, ratio <= 2.5,
                        note=f"time ratio for doubled length: {ratio:.2f}")
        )
    return report
