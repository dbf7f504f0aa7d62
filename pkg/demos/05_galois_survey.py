# How often does a random polynomial admit a Dedekind witness prime?
#
# Random degree-4 polynomials with coefficients in [-H, H]: the fraction with
# a rootless admissible prime below 1000 climbs towards 1 as H grows.
from preperiodic.families import census_galois, survey_trend

for H, frac in survey_trend(4, [10, 100, 1000], samples=500, seed=1):
    print(f"H = {H:>5}   fraction = {frac:.3f}")

hits, total = census_galois(2, 1, monic=True)
print(f"monic quadratics of height 1: {hits}/{total} certifiable")
