"""
Structured Logging Utility for the CSA routing simulator

Provides consistent, structured log lines for the simulation pipeline
(topology -> alignment -> routing -> report).
"""

import logging
from typing import Optional


class StructuredLogger:
    """
    Structured logger that provides consistent formatting for simulator events

    Usage:
        from src.utils.logging_helper import get_logger

        logger = get_logger(__name__)
        logger.log_topology_generated(seed, n, avg_degree)
    """

    def __init__(self, name: str):
        self.logger = logging.getLogger(name)

    # === TOPOLOGY & ALIGNMENT ===

    def log_topology_generated(self, seed: Optional[int], n: int, avg_degree: float, components: int):
        self.logger.info(
            f"🗺️ Topology seed={seed} | "
            f"Nodes: {n} | "
            f"Avg degree: {avg_degree:.2f} | "
            f"Components: {components}"
        )

    def log_alignment_computed(self, seed: Optional[int], max_depth: int, rule: str):
        self.logger.debug(f"📐 Alignment seed={seed} | Depths 0..{max_depth} | Rule: {rule}")

    # === ROUTING ===

    def log_mode_summary(self, seed: Optional[int], mode: str, delivered: int, routed: int, greedy_only: int):
        self.logger.info(
            f"🔎 seed={seed} {mode} | "
            f"Delivered: {delivered}/{routed} | "
            f"Pure greedy: {greedy_only}"
        )

    # === EXPERIMENT ===

    def log_seed_skipped(self, seed: int, reason: str):
        self.logger.warning(f"⚠️  Seed {seed} skipped | Reason: {reason}")

    def log_experiment_done(self, seeds_run: int, seeds_skipped: int, elapsed_s: float):
        self.logger.info(
            f"📊 Experiment finished | "
            f"Seeds: {seeds_run} run, {seeds_skipped} skipped | "
            f"Time: {elapsed_s:.1f}s"
        )

    # === ERROR LOGGING ===

    def log_invariant_violation(self, check: str, details: str):
        self.logger.error(f"❌ Invariant failed: {check} | {details}")

    # === GENERIC LOGGING (passthrough to standard logger) ===

    def info(self, message: str):
        self.logger.info(message)


# === FACTORY FUNCTION ===

def get_logger(name: str) -> StructuredLogger:
    """
    Get a structured logger instance

    Usage:
        from src.utils.logging_helper import get_logger
        logger = get_logger(__name__)
    """
    return StructuredLogger(name)


LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s'


def configure_logging(level: str) -> None:
    """One-time root logging setup for the entry points (main.py, src/cli.py)."""
    logging.basicConfig(level=level, format=LOG_FORMAT)
