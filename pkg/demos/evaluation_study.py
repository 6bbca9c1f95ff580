"""Reproduce the rank-comparison study shape on the synthetic corpus.

For each pipeline configuration, every goldset query is ranked and the mean
position of the known bug-fixing comment is recorded; configuration pairs are
then compared with Student's paired t-test (two-tailed, alpha = 0.05).

Run with: python demos/evaluation_study.py
"""

from retrorank import synthetic
from retrorank.evalstats import report_text, run_eval
from retrorank.ranker import preset
from retrorank.sentiment import default_lexicon

corpus, goldset = synthetic.generate(seed=7)
lexicon = default_lexicon()

configs = [preset(name) for name in ("vsm", "vsm+sa", "vsm+tr", "vsm+sa+tr")]
report = run_eval(corpus, lexicon, goldset, configs)

print(report_text(report))
print()

best = min(report.runs, key=lambda run: run.mu)
baseline = next(run for run in report.runs if run.config_name == "vsm")
print(f"best configuration: {best.config_name} "
      f"(mean rank {best.mu:.2f} vs baseline {baseline.mu:.2f})")
for pair in report.pairs:
    if {pair.config_a, pair.config_b} == {"vsm", best.config_name}:
        t = pair.ttest
        print(f"baseline comparison: t = {t.t:.3f}, p = {t.p_two_tailed:.3g}, "
              f"t_crit = {t.t_crit:.4f} -> {t.decision}")
