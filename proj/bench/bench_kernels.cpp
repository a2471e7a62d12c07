#include <benchmark/benchmark.h>

#include "conglab/partition.hpp"
#include "conglab/sphere.hpp"

using namespace conglab;

namespace {

void certify(benchmark::State& state, Kernel kernel) {
  const GroupRealization real = standard_generators(Presentation(5, 0));
  const auto depth = static_cast<std::size_t>(state.range(0));
  std::uint64_t words = 0;
  for (auto _ : state) {
    const FreenessCertificate cert = certify_ball_freeness(real, depth, kernel);
    words = cert.words;
    benchmark::DoNotOptimize(cert.certified);
  }
  state.counters["words"] = static_cast<double>(words);
  state.SetItemsProcessed(static_cast<std::int64_t>(words) * state.iterations());
}

void verify(benchmark::State& state, Kernel kernel) {
  const CongruenceSystem sys = fixtures::five_set();
  const Presentation p = witness_presentation(sys, sys.size());
  const GroupPartition part = build_group_partition(sys, sys.size(), parse_word("s1^2", p));
  const auto depth = static_cast<std::size_t>(state.range(0));
  std::uint64_t words = 0;
  for (auto _ : state) {
    const PartitionReport rep = verify_group_partition(part, depth, kernel);
    words = rep.words;
    benchmark::DoNotOptimize(rep.passed);
  }
  state.counters["words"] = static_cast<double>(words);
  state.SetItemsProcessed(static_cast<std::int64_t>(words) * state.iterations());
}

void BM_CertifySerial(benchmark::State& s) { certify(s, Kernel::Serial); }
void BM_CertifyParallel(benchmark::State& s) { certify(s, Kernel::Parallel); }
void BM_VerifySerial(benchmark::State& s) { verify(s, Kernel::Serial); }
void BM_VerifyParallel(benchmark::State& s) { verify(s, Kernel::Parallel); }

}  // namespace

BENCHMARK(BM_CertifySerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
