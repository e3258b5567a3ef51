"""Heart-rate-efficiency analytics.

The central quantity is HRE: heart rate (beats/min) times pace (min/km),
i.e. beats spent per kilometer.  Lower is fitter.  This module also provides
pace parsing and conversion, time-window smoothing, intra-session drift
analysis, fitness banding, spectral breathing rate from RR intervals, and
grade estimation with its correlation against HRE.
"""
from __future__ import annotations

import enum
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

import numpy as np

from .errors import HrefitError
from .model import (
    DEFAULT_STOP_SPEED,
    Activity,
    RRSeries,
    SeriesUnit,
    TimeSeries,
)


class MalformedPace(HrefitError):
    """Pace text is not M:SS or a positive decimal."""


class NonpositiveSpeed(HrefitError):
    """Speed must be strictly positive to convert to pace."""


class NonpositiveInput(HrefitError):
    """Heart rate and pace must both be strictly positive."""


class EmptySeries(HrefitError):
    """The operation needs a non-empty series."""


class NoUsableSamples(HrefitError):
    """No sample had both heart rate and speed above the stop threshold."""


class TooShort(HrefitError):
    """The series does not span enough time past the warmup."""


class InsufficientData(HrefitError):
    """Less than one analysis window of RR data."""


class NoSpectralPeak(HrefitError):
    """No breathing-band peak stood out anywhere in the RR series."""


class NoAltitude(HrefitError):
    """Grade needs altitude and cumulative distance data."""


class DegenerateVariance(HrefitError):
    """Correlation is undefined when either series has no variance."""


DEFAULT_SMOOTHING_WINDOW = 30.0  # s
DEFAULT_WARMUP = 300.0  # s
DEFAULT_STABILITY_PCT = 5.0
DEFAULT_WALL_PCT = 8.0
WELL_FITTED_MAX_HRE = 750.0
POORLY_FITTED_MIN_HRE = 800.0

# Drift needs some post-warmup signal to regress on.
MIN_ANALYSIS_SPAN = 600.0  # s

# Breathing-rate analysis constants.
BREATHING_WINDOW = 60.0  # s
BREATHING_STEP = 5.0  # s
BREATHING_MIN_SPAN = 30.0  # s of RR data required per window
BREATHING_RESAMPLE_HZ = 4.0
BREATHING_BAND = (0.15, 1.2)  # Hz
_MIN_BEATS_PER_WINDOW = 8
_FLAT_RR_STD = 1e-4  # s; below this the window has no respiratory modulation

# Grade is meaningless over tiny distance deltas.
MIN_GRADE_DISTANCE = 5.0  # m


def parse_pace(text: str) -> float:
    """Parse 'M:SS' or decimal minutes per kilometer to decimal minutes.

    '5:25' -> 5 + 25/60.  Seconds must sit in [0, 60); both parts must be
    non-negative and the result strictly positive.
    """
    s = text.strip()
    if ":" in s:
        minutes_part, _, seconds_part = s.partition(":")
        try:
            minutes = int(minutes_part)
            seconds = float(seconds_part)
        except ValueError:
            raise MalformedPace(f"unreadable pace {text!r}") from None
        if minutes < 0 or not 0 <= seconds < 60:
            raise MalformedPace(f"pace {text!r} outside M:SS form")
        value = minutes + seconds / 60.0
    else:
        try:
            value = float(s)
        except ValueError:
            raise MalformedPace(f"unreadable pace {text!r}") from None
    if not value > 0 or not math.isfinite(value):
        raise MalformedPace(f"pace must be positive, got {text!r}")
    return value


def format_pace(pace: float) -> str:
    """Render decimal minutes per kilometer as M:SS."""
    total_seconds = pace * 60.0
    minutes = int(total_seconds // 60)
    seconds = round(total_seconds - minutes * 60)
    if seconds == 60:
        minutes += 1
        seconds = 0
    return f"{minutes}:{seconds:02d}"


def pace_from_speed(speed: float) -> float:
    """Convert speed in m/s to pace in decimal minutes per kilometer."""
    if not speed > 0:
        raise NonpositiveSpeed(f"speed must be positive, got {speed}")
    return 1000.0 / (60.0 * speed)


def hre(heart_rate: float, pace: float) -> float:
    """Beats per kilometer: heart rate (beats/min) times pace (min/km)."""
    if not heart_rate > 0 or not pace > 0:
        raise NonpositiveInput(f"need positive heart rate and pace, got {heart_rate}, {pace}")
    return heart_rate * pace


def smooth(series: TimeSeries, window: float = DEFAULT_SMOOTHING_WINDOW) -> TimeSeries:
    """Centered moving average over all samples within +/- window/2 seconds.

    The window truncates at the series edges.  Absent values are excluded
    from neighboring means and stay absent in the output.
    """
    if window <= 0:
        raise ValueError("window must be positive")
    if len(series) == 0:
        raise EmptySeries("cannot smooth an empty series")
    t = series.t
    v = series.v
    n = len(t)
    half = window / 2.0
    out: list[float | None] = []
    lo = 0
    hi = 0
    for i in range(n):
        while hi < n and t[hi] <= t[i] + half:
            hi += 1
        while t[lo] < t[i] - half:
            lo += 1
        if v[i] is None:
            out.append(None)
            continue
        neighbors = [v[j] for j in range(lo, hi) if v[j] is not None]
        out.append(math.fsum(neighbors) / len(neighbors))
    return TimeSeries(series.unit, t, tuple(out))


def hre_series(
    activity: Activity,
    window: float = DEFAULT_SMOOTHING_WINDOW,
    stop_speed_threshold: float = DEFAULT_STOP_SPEED,
) -> TimeSeries:
    """Per-sample HRE, smoothed over the given window.

    Instants missing heart rate, missing speed, or slower than the stop
    threshold are absent.  A zero heart-rate reading counts as absent; no
    heart beats zero times per minute while running.
    """
    ts: list[float] = []
    vs: list[float | None] = []
    for s in activity.samples:
        ts.append(s.t)
        if not s.heart_rate or s.speed is None or s.speed < stop_speed_threshold:
            vs.append(None)
        else:
            vs.append(hre(s.heart_rate, pace_from_speed(s.speed)))
    if not any(x is not None for x in vs):
        raise NoUsableSamples("no sample with heart rate and moving speed")
    return smooth(TimeSeries(SeriesUnit.BEATS_PER_KM, tuple(ts), tuple(vs)), window)


@dataclass(frozen=True)
class DriftReport:
    """Intra-session trend of an HRE series, warmup excluded.

    slope is the fitted linear slope in value-units per hour; drift_pct is
    slope times analyzed span, relative to the analyzed mean.
    late_degradation_pct compares the final fifth of the analyzed span to
    the 20-50% stretch; a large positive value is the classic late-race
    blowup, flagged by wall_flag.
    """

    warmup_excluded: float
    mean_hre: float
    slope: float
    drift_pct: float
    stable: bool
    late_degradation_pct: float
    wall_flag: bool


def drift(
    series: TimeSeries,
    warmup: float = DEFAULT_WARMUP,
    stability_pct: float = DEFAULT_STABILITY_PCT,
    wall_pct: float = DEFAULT_WALL_PCT,
) -> DriftReport:
    """Linear drift of a series after the warmup, plus late-race degradation.

    Requires the series to span more than warmup + MIN_ANALYSIS_SPAN
    seconds; raises TooShort otherwise.
    """
    if len(series) == 0:
        raise TooShort("empty series")
    if series.span <= warmup + MIN_ANALYSIS_SPAN:
        raise TooShort(
            f"series spans {series.span:.0f} s, need more than "
            f"{warmup + MIN_ANALYSIS_SPAN:.0f} s"
        )
    cutoff = series.t[0] + warmup
    pts = [(tt, vv) for tt, vv in series.present() if tt >= cutoff]
    if len(pts) < 2:
        raise TooShort("fewer than two present values after warmup")
    t = np.array([p[0] for p in pts], dtype=float)
    v = np.array([p[1] for p in pts], dtype=float)
    span = float(t[-1] - t[0])
    if span <= 0:
        raise TooShort("analyzed values span no time")
    mean = float(v.mean())
    if mean == 0:
        raise TooShort("mean of analyzed values is zero")
    tc = t - t.mean()
    denom = float(np.dot(tc, tc))
    if denom == 0:
        raise TooShort("analyzed values share one instant")
    slope = float(np.dot(tc, v - v.mean()) / denom)  # units per second
    drift_pct = slope * span / mean * 100.0

    late_lo = t[0] + 0.8 * span
    mid_lo = t[0] + 0.2 * span
    mid_hi = t[0] + 0.5 * span
    late = v[t >= late_lo]
    mid = v[(t >= mid_lo) & (t <= mid_hi)]
    if len(late) == 0 or len(mid) == 0 or float(mid.mean()) == 0:
        raise TooShort("not enough values in the comparison windows")
    late_degradation_pct = (float(late.mean()) / float(mid.mean()) - 1.0) * 100.0

    return DriftReport(
        warmup_excluded=warmup,
        mean_hre=mean,
        slope=slope * 3600.0,
        drift_pct=drift_pct,
        stable=abs(drift_pct) <= stability_pct,
        late_degradation_pct=late_degradation_pct,
        wall_flag=late_degradation_pct > wall_pct,
    )


class Band(str, enum.Enum):
    WELL_FITTED = "well_fitted"
    INTERMEDIATE = "intermediate"
    POORLY_FITTED = "poorly_fitted"


@dataclass(frozen=True)
class FitnessBand:
    band: Band
    mean_hre: float


def classify_fitness(
    mean_hre: float,
    well_fitted_max: float = WELL_FITTED_MAX_HRE,
    poorly_fitted_min: float = POORLY_FITTED_MIN_HRE,
) -> FitnessBand:
    """Band a mean HRE: at most well_fitted_max is well fitted, above
    poorly_fitted_min is poorly fitted, between is intermediate."""
    if well_fitted_max > poorly_fitted_min:
        raise ValueError("band thresholds out of order")
    if mean_hre <= well_fitted_max:
        band = Band.WELL_FITTED
    elif mean_hre > poorly_fitted_min:
        band = Band.POORLY_FITTED
    else:
        band = Band.INTERMEDIATE
    return FitnessBand(band=band, mean_hre=mean_hre)


def _window_rate(tt: np.ndarray, vv: np.ndarray) -> float | None:
    """Breathing rate for one window of (beat time, RR value) points."""
    if len(tt) < _MIN_BEATS_PER_WINDOW or tt[-1] - tt[0] < BREATHING_MIN_SPAN:
        return None
    x = vv - vv.mean()
    # remove any linear trend so slow drift cannot mask the breathing peak
    coeffs = np.polyfit(tt, x, 1)
    x = x - np.polyval(coeffs, tt)
    if float(x.std()) < _FLAT_RR_STD:
        return None
    step = 1.0 / BREATHING_RESAMPLE_HZ
    grid = np.arange(tt[0], tt[-1] + step / 2, step)
    y = np.interp(grid, tt, x)
    n = len(y)
    if n < 8:
        return None
    # zero-pad so the spectrum is sampled finely enough to place the peak
    padded = 1
    while padded < 8 * n:
        padded *= 2
    spectrum = np.abs(np.fft.rfft(y, n=padded))
    freqs = np.fft.rfftfreq(padded, d=step)
    band = (freqs >= BREATHING_BAND[0]) & (freqs <= BREATHING_BAND[1])
    if not band.any():
        return None
    mags = spectrum[band]
    if float(mags.max()) <= 0:
        return None
    peak_hz = float(freqs[band][int(mags.argmax())])
    return 60.0 * peak_hz


def breathing_rate(
    rr: RRSeries,
    window: float = BREATHING_WINDOW,
    step: float = BREATHING_STEP,
) -> TimeSeries:
    """Breathing rate over time from respiratory sinus arrhythmia.

    Cumulative RR sums form the sample clock.  Each sliding window is
    mean-removed, detrended, resampled to a uniform grid, and Fourier
    transformed; the rate is 60 times the peak frequency in the breathing
    band.  Windows without a discernible peak are absent; if no window has
    one, NoSpectralPeak is raised.
    """
    if window <= 0 or step <= 0:
        raise ValueError("window and step must be positive")
    intervals = np.asarray(rr.intervals, dtype=float)
    if intervals.size == 0:
        raise InsufficientData("empty RR series")
    beat_t = np.cumsum(intervals)
    total = float(beat_t[-1])
    if total < BREATHING_MIN_SPAN:
        raise InsufficientData(
            f"RR data spans {total:.1f} s, need at least {BREATHING_MIN_SPAN:.0f} s"
        )

    starts: list[float] = []
    if total >= window:
        k = 0
        while k * step + window <= total:
            starts.append(k * step)
            k += 1
    else:
        starts.append(0.0)  # single truncated window; span check still applies

    centers: list[float] = []
    rates: list[float | None] = []
    for w0 in starts:
        w1 = min(w0 + window, total)
        sel = (beat_t >= w0) & (beat_t <= w1)
        centers.append((w0 + w1) / 2.0)
        rates.append(_window_rate(beat_t[sel], intervals[sel]))

    if not any(r is not None for r in rates):
        raise NoSpectralPeak("no breathing-band peak in any window")
    return TimeSeries(SeriesUnit.BREATHS_PER_MIN, tuple(centers), tuple(rates))


def grade_series(
    activity: Activity,
    window: float = DEFAULT_SMOOTHING_WINDOW,
) -> TimeSeries:
    """Terrain grade per sample: rise over run across the smoothing window.

    Altitude and cumulative distance are both smoothed over the window so
    their endpoints describe the same stretch of ground; grade is their
    delta ratio.  Absent where either endpoint is unknown or the distance
    delta is under MIN_GRADE_DISTANCE meters.
    """
    samples = activity.samples
    if not any(s.altitude is not None for s in samples):
        raise NoAltitude("no altitude data")
    if not any(s.distance is not None for s in samples):
        raise NoAltitude("no cumulative distance data")
    t = tuple(s.t for s in samples)
    alt = smooth(TimeSeries(SeriesUnit.METERS, t, tuple(s.altitude for s in samples)), window)
    dist = smooth(TimeSeries(SeriesUnit.METERS, t, tuple(s.distance for s in samples)), window)
    n = len(samples)
    half = window / 2.0
    out: list[float | None] = []
    for i in range(n):
        a = bisect_left(t, t[i] - half)
        b = bisect_right(t, t[i] + half) - 1
        d0, d1 = dist.v[a], dist.v[b]
        h0, h1 = alt.v[a], alt.v[b]
        if None in (d0, d1, h0, h1) or (d1 - d0) < MIN_GRADE_DISTANCE:
            out.append(None)
        else:
            out.append((h1 - h0) / (d1 - d0))
    return TimeSeries(SeriesUnit.GRADE, t, tuple(out))


def pearson(xs: np.ndarray, ys: np.ndarray) -> float:
    """Pearson correlation; raises DegenerateVariance on constant input."""
    if len(xs) < 2:
        raise DegenerateVariance("need at least two paired values")
    xc = xs - xs.mean()
    yc = ys - ys.mean()
    sx = float(np.dot(xc, xc))
    sy = float(np.dot(yc, yc))
    # relative floor: spread below ~1e-9 of the magnitude is rounding noise,
    # not signal, and would yield an arbitrary r
    fx = (1e-9 * max(1.0, float(np.abs(xs).max()))) ** 2 * len(xs)
    fy = (1e-9 * max(1.0, float(np.abs(ys).max()))) ** 2 * len(ys)
    if sx <= fx or sy <= fy:
        raise DegenerateVariance("a series is constant")
    return float(np.dot(xc, yc) / math.sqrt(sx * sy))


def hre_grade_correlation(
    activity: Activity,
    window: float = DEFAULT_SMOOTHING_WINDOW,
) -> float:
    """Pearson correlation between smoothed HRE and grade, paired by sample."""
    h = hre_series(activity, window)
    g = grade_series(activity, window)
    pairs = [
        (hv, gv)
        for hv, gv in zip(h.v, g.v)
        if hv is not None and gv is not None
    ]
    if len(pairs) < 2:
        raise DegenerateVariance("fewer than two instants have both HRE and grade")
    xs = np.array([p[0] for p in pairs], dtype=float)
    ys = np.array([p[1] for p in pairs], dtype=float)
    return pearson(xs, ys)
