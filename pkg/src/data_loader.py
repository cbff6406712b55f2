"""Reading and writing sampled signals and reports."""
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np
import pandas as pd

from src.exceptions import DataLoadError, DataValidationError, DomainError, PlanValidationError
from src.logger import get_logger
from src.models.basis_models import SampledSignal
from src.models.plan_models import FilterPlan, SignalPayload

logger = get_logger(__name__)

PathLike = Union[str, Path]


class DataLoader:
    """Handles CSV signal ingest/egress and JSON report output."""

    def __init__(self):
        """Initialize data loader."""
        logger.debug("DataLoader initialized")

    def load_signal(
        self, path: PathLike, t0: Optional[float] = None, dt: Optional[float] = None
    ) -> SampledSignal:
        """
        Read a sampled signal from CSV.

        Two layouts are accepted: columns `t,value` (optionally `value_imag`), or a
        single value column whose grid is given by `t0` and `dt`. Lines starting
        with `#` are comments.

        Args:
            path: CSV file to read
            t0: Grid origin for single-column input (default 0)
            dt: Grid step for single-column input

        Returns:
            SampledSignal on the file's uniform grid
        """
        df = self._read_csv(path)
        if df.empty:
            raise DataLoadError(f"No samples in {path}")

        if "t" in df.columns and "value" in df.columns:
            t = self._numeric(df["t"], "t", path)
            values = self._complex_values(df, path)
            try:
                signal = SampledSignal.from_grid(t, values)
            except DomainError as e:
                raise DataValidationError(f"{path}: {e}")
        elif df.shape[1] == 1:
            if dt is None:
                raise DataValidationError(f"{path} has a single column; a sample step dt is required")
            values = self._numeric(df.iloc[:, 0], "value", path)
            try:
                signal = SampledSignal(0.0 if t0 is None else float(t0), float(dt), values)
            except DomainError as e:
                raise DataValidationError(f"{path}: {e}")
        else:
            raise DataLoadError(f"{path} must have columns 't,value' or a single value column")

        logger.info(f"Loaded {len(signal)} samples from {path}")
        return signal

    def _read_csv(self, path: PathLike) -> pd.DataFrame:
        try:
            df = pd.read_csv(path, comment="#", skipinitialspace=True, float_precision="round_trip")
            if df.shape[1] == 1 and self._is_number(df.columns[0]):
                # Header-less single column: the first sample was taken as the header
                df = pd.read_csv(
                    path, comment="#", header=None, skipinitialspace=True, float_precision="round_trip"
                )
            return df
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
            logger.error(f"Failed to read {path}: {e}")
            raise DataLoadError(f"Cannot read signal file {path}: {e}")

    @staticmethod
    def _is_number(text: Any) -> bool:
        try:
            float(text)
            return True
        except (TypeError, ValueError):
            return False

    @staticmethod
    def _numeric(column: pd.Series, name: str, path: PathLike) -> np.ndarray:
        values = pd.to_numeric(column, errors="coerce").to_numpy(dtype=float)
        if not np.all(np.isfinite(values)):
            row = int(np.argmax(~np.isfinite(values)))
            raise DataLoadError(f"{path}: column '{name}' has a non-numeric value at row {row}")
        return values

    def _complex_values(self, df: pd.DataFrame, path: PathLike) -> np.ndarray:
        values = self._numeric(df["value"], "value", path).astype(complex)
        if "value_imag" in df.columns:
            values += 1j * self._numeric(df["value_imag"], "value_imag", path)
        return values

    def load_plan(self, path: PathLike) -> FilterPlan:
        """Read and validate a JSON filter plan."""
        try:
            with open(path, "r", encoding="utf-8") as handle:
                data = json.load(handle)
        except OSError as e:
            logger.error(f"Failed to read plan {path}: {e}")
            raise DataLoadError(f"Cannot read plan {path}: {e}")
        except json.JSONDecodeError as e:
            raise PlanValidationError("plan", f"{path} is not valid JSON: {e}")
        if not isinstance(data, dict):
            raise PlanValidationError("plan", f"{path} must hold a JSON object")
        plan = FilterPlan.from_dict(data)
        logger.info(f"Loaded plan from {path}: {plan.basis.value}, {plan.modes} modes, {len(plan.steps)} step(s)")
        return plan

    def write_signal(self, path: PathLike, signal: SampledSignal, comment: Optional[str] = None) -> None:
        """Write `t,value[,value_imag]` atomically; `comment` becomes a leading `#` line."""
        frame = self.signal_frame(signal)
        header = f"# {comment}\n" if comment else ""
        self._atomic_write(path, header + frame.to_csv(index=False, float_format="%.17g"))
        logger.info(f"Wrote {len(signal)} samples to {path}")

    def write_report(self, path: PathLike, report: Dict[str, Any]) -> None:
        """Write a JSON report atomically."""
        self._atomic_write(path, json.dumps(report, indent=2, sort_keys=True) + "\n")
        logger.info(f"Wrote report to {path}")

    @staticmethod
    def signal_frame(signal: SampledSignal) -> pd.DataFrame:
        frame = pd.DataFrame({"t": signal.grid, "value": signal.values.real})
        if np.any(signal.values.imag != 0):
            frame["value_imag"] = signal.values.imag
        return frame

    def _atomic_write(self, path: PathLike, text: str) -> None:
        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp_name = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
                    handle.write(text)
                os.replace(tmp_name, target)
            except BaseException:
                if os.path.exists(tmp_name):
                    os.unlink(tmp_name)
                raise
        except OSError as e:
            logger.error(f"Failed to write {path}: {e}")
            raise DataLoadError(f"Cannot write {path}: {e}")

    @staticmethod
    def signal_from_payload(payload: SignalPayload) -> SampledSignal:
        """SampledSignal from an HTTP payload; the t grid must be uniform."""
        values = np.asarray(payload.value, dtype=complex)
        if payload.value_imag is not None:
            values = values + 1j * np.asarray(payload.value_imag, dtype=float)
        try:
            return SampledSignal.from_grid(np.asarray(payload.t, dtype=float), values)
        except DomainError as e:
            raise DataValidationError(str(e))

    @staticmethod
    def payload_from_signal(signal: SampledSignal) -> SignalPayload:
        imag = signal.values.imag
        return SignalPayload(
            t=signal.grid.tolist(),
            value=signal.values.real.tolist(),
            value_imag=imag.tolist() if np.any(imag != 0) else None,
        )
