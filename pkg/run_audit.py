import argparse
from typing import List, Optional

from categories import AxiomReport, Sampler, StructuredCategory, check_j1, check_j2, check_m1m2
from chaincat import ChainConfig, ChainInstance, ChainSampler
from chains.documents import map_to_document, write_document


def run_audit(
    category: StructuredCategory, sampler: Sampler, samples: int, seed: int
) -> List[AxiomReport]:
    """
    Audit J1, J2 and M1/M2 on the same master seed.

    Args:
        category (StructuredCategory): Instance under audit.
        sampler (Sampler): Source of random objects and maps.
        samples (int): Trials per axiom.
        seed (int): Master seed.

    Returns:
        List[AxiomReport]: One report per axiom, in that order.
    """
    return [check(category, sampler, samples, seed) for check in (check_j1, check_j2, check_m1m2)]


def print_reports(reports: List[AxiomReport]) -> None:
    for report in reports:
        verdict = "pass" if report.passed else "FAIL"
        print(
            f"{report.axiom}: {verdict} "
            f"({report.samples} samples, {report.checks} checks, seed {report.seed})"
        )
        for failure in report.failures:
            print(f"  replay seed {failure.seed}: {failure.check}: {failure.message}")


def main(args: argparse.Namespace, category: Optional[StructuredCategory] = None) -> int:
    """Run the axiom audit on the chain complex instance; 1 if any check failed."""
    category = category or ChainInstance(ChainConfig(support_guard=args.support_guard))
    reports = run_audit(category, ChainSampler(), args.samples, args.seed)
    print_reports(reports)
    if getattr(args, "out", None):
        write_document(args.out, [r.to_document(map_to_document) for r in reports])
    return 0 if all(r.passed for r in reports) else 1
