#include <benchmark/benchmark.h>

#include "nashforge/charp.hpp"
#include "nashforge/diffops.hpp"
#include "nashforge/parser.hpp"
#include "nashforge/pparts.hpp"

using namespace nashforge;

namespace {

Ideal parse_ideal(long p, std::vector<std::string> vars, const std::vector<std::string>& gens) {
    RingPtr ring = make_ring(p ? FieldSpec::prime_field(p) : FieldSpec::rationals(), std::move(vars));
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(ring, g));
    return Ideal(ring, std::move(ps));
}

void bench_groebner_cyclic4(benchmark::State& state) {
    for (auto _ : state) {
        Budget::reset();
        Ideal I = parse_ideal(0, {"a", "b", "c", "d"},
                              {"a+b+c+d", "a*b+b*c+c*d+d*a", "a*b*c+b*c*d+c*d*a+d*a*b",
                               "a*b*c*d-1"});
        benchmark::DoNotOptimize(I.groebner());
    }
}
BENCHMARK(bench_groebner_cyclic4);

void bench_diffpower_quadric(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Budget::reset();
        Ideal I = parse_ideal(0, {"u", "v", "w"}, {"u*w-v^2"});
        benchmark::DoNotOptimize(differential_power(I, n).codim);
    }
}
BENCHMARK(bench_diffpower_quadric)->Arg(2)->Arg(3);

void bench_pparts_cusp(benchmark::State& state) {
    for (auto _ : state) {
        Budget::reset();
        Ideal I = parse_ideal(0, {"x", "y"}, {"x^3-y^2"});
        PPartsPresentation P = principal_parts(I, 2);
        benchmark::DoNotOptimize(pparts_torsion(I, P, Polynomial(I.ring())).torsion_free);
    }
}
BENCHMARK(bench_pparts_cusp);

void bench_kunz_quadric_f5(benchmark::State& state) {
    for (auto _ : state) {
        Budget::reset();
        Ideal I = parse_ideal(5, {"u", "v", "w"}, {"u*w-v^2"});
        benchmark::DoNotOptimize(kunz_regularity(I, 1).verdict);
    }
}
BENCHMARK(bench_kunz_quadric_f5);

void bench_jets_cusp(benchmark::State& state) {
    int cutoff = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Budget::reset();
        Ideal I = parse_ideal(0, {"x", "y"}, {"x^3-y^2"});
        benchmark::DoNotOptimize(jets_codim_lower_bound(I, 2, cutoff));
    }
}
BENCHMARK(bench_jets_cusp)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
