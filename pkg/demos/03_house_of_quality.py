"""The fuzzy house of quality, end to end on the bundled example.

CR weights multiply into the relationship grid (relative importance),
roof correlations feed each column its neighbours' share (priority),
the columns are normalized by the strongest one, and the defuzzified
crisp values produce the final technical-requirement ranking.
"""

from fuzzyhoq import bundled_paper_project, compute_ahp, compute_rank

project = bundled_paper_project()
print(f"project: {project.name}")
print(f"         {len(project.crs)} customer requirements x {len(project.trs)} technical requirements")

print()
print("Global CR weights (group aggregate, two-level hierarchy)")
print("=" * 70)
ahp_result = compute_ahp(project)
for m in ahp_result.matrices:
    print(f"  {m.slot:<9} cr={m.consistency.cr:.4f} acceptable={m.consistency.acceptable}")
labels = dict(project.crs)
ranked_weights = sorted(
    zip(ahp_result.cr_codes, ahp_result.global_weights), key=lambda t: -t[1]
)
for code, weight in ranked_weights[:5]:
    print(f"  {code:<5} {weight:.4f}  {labels[code]}")
print("  ...")

print()
print("TR ranking by crisp value")
print("=" * 70)
report = compute_rank(project)
widest = max(row.crisp for row in report.rows)
for row in report.ranked():
    bar = "#" * int(round(36 * row.crisp / widest))
    print(f"  {row.rank:2d}. {row.code:<5} {row.crisp:6.4f} {bar}")

top = report.ranked()[0]
print()
print(f"top priority: {top.code} - {top.label}")
print(f"  RI   = ({top.ri.a:.4f}, {top.ri.b:.4f}, {top.ri.c:.4f})")
print(f"  RI*  = ({top.ri_star.a:.4f}, {top.ri_star.b:.4f}, {top.ri_star.c:.4f})  (roof added)")
print(f"  NRI* = ({top.nri_star.a:.4f}, {top.nri_star.b:.4f}, {top.nri_star.c:.4f})")
print(f"  crisp {top.crisp:.4f}: fuzzy normalization lets the leader exceed 1")
