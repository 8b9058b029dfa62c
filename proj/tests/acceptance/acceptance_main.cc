/*
 * Copyright 2026 The edgeood Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "edge/cli/commands.h"
#include "edge/core/csv.h"
#include "edge/core/dataset.h"
#include "edge/core/numeric.h"
#include "edge/experiment/pipeline.h"
#include "edge/losses/losses.h"
#include "edge/metrics/average_precision.h"
#include "edge/metrics/detection.h"
#include "edge/model/trainer.h"
#include "edge/oesel/oesel.h"
#include "edge/scoring/scoring.h"
#include "edge/synth/synth.h"
#include "gradient_fixtures.h"
#include "metric_fixtures.h"
#include "oracles/oracles.h"
#include "table3_fixture.h"
#include "test_util.h"

namespace edge {
namespace {

using Clock = std::chrono::steady_clock;

constexpr int kSeeds = 5;
constexpr int kSeedsRequired = 4;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

Outcome Gradients() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const Matrix f = test::RandomLogits(2 + rng.Index(6), 1 + rng.Index(6), rng);
    const LabelMatrix y = test::RandomLabels(f.rows(), f.cols(), rng);
    worst = std::max(worst, test::RelativeError(
                                losses::LossId(f, y).grad,
                                oracles::FiniteDifferenceGradient(
                                    [&](const Matrix& m) { return losses::LossId(m, y).value; },
                                    f, test::kFdStep)));
    worst = std::max(worst, test::RelativeError(
                                losses::LossConf(f).grad,
                                oracles::FiniteDifferenceGradient(
                                    [](const Matrix& m) { return losses::LossConf(m).value; },
                                    f, test::kFdStep)));

    const test::GapPoint p = test::SmoothGapPoint(seed);
    const losses::PairLossValue gap = losses::LossGap(p.id_logits, p.oe_logits, p.k, p.margin);
    worst = std::max(worst, test::RelativeError(
                                gap.id_grad, oracles::FiniteDifferenceGradient(
                                                 [&](const Matrix& m) {
                                                   return losses::LossGap(m, p.oe_logits, p.k,
                                                                          p.margin)
                                                       .value;
                                                 },
                                                 p.id_logits, test::kFdStep)));
    worst = std::max(worst, test::RelativeError(
                                gap.oe_grad, oracles::FiniteDifferenceGradient(
                                                 [&](const Matrix& m) {
                                                   return losses::LossGap(p.id_logits, m, p.k,
                                                                          p.margin)
                                                       .value;
                                                 },
                                                 p.oe_logits, test::kFdStep)));

    const test::ModelPoint mp = test::SmoothModelPoint(seed);
    worst = std::max(worst,
                     test::RelativeError(test::Flatten(test::AnalyticModelGradient(mp)),
                                         test::Flatten(test::FiniteDifferenceModelGradient(mp))));
  }
  const double t = Seconds(start);
  return {worst < 1e-5 && t < 10.0,
          Format("max relative error %.3g over 4 x 20 points (< 1e-5), %.2f s (< 10 s)", worst,
                 t)};
}

Outcome MetricOracles() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const test::DetectionFixture d = test::RandomDetectionFixture(seed);
    worst = std::max(worst, std::abs(metrics::Auroc(d.id, d.ood) -
                                     oracles::BruteAuroc(d.id, d.ood)));
    worst = std::max(worst, std::abs(metrics::FprAtTpr(d.id, d.ood, 0.95) -
                                     oracles::BruteFprAtTpr(d.id, d.ood, 0.95)));
    worst = std::max(worst, std::abs(metrics::Aupr(d.id, d.ood) -
                                     oracles::BruteAupr(d.id, d.ood)));

    const test::RankingFixture r = test::RandomRankingFixture(seed);
    double sum = 0.0;
    int counted = 0;
    for (std::size_t c = 0; c < r.scores.cols(); ++c) {
      std::vector<double> scores(r.scores.rows());
      std::vector<int> labels(r.scores.rows());
      for (std::size_t i = 0; i < scores.size(); ++i) {
        scores[i] = r.scores(i, c);
        labels[i] = r.labels(i, c);
      }
      if (std::count(labels.begin(), labels.end(), 1) == 0) continue;
      sum += oracles::BruteAveragePrecision(scores, labels);
      ++counted;
    }
    worst = std::max(worst, std::abs(metrics::MeanAveragePrecision(r.scores, r.labels).value -
                                     sum / counted));
  }
  const double t = Seconds(start);
  return {worst <= 1e-12 && t < 5.0,
          Format("max deviation %.3g on 50 fixtures (<= 1e-12), %.3f s (< 5 s)", worst, t)};
}

Outcome EnergyStability() {
  const std::vector<double> one = {1000.0};
  const double e = scoring::JointEnergy(one);
  const double rel = std::abs(e - 1000.0) / 1000.0;
  bool finite = true;
  Rng rng(3);
  for (double v = -1000.0; v <= 1000.0; v += 0.25) {
    const std::vector<double> row = {v, -v, rng.Uniform(-1000.0, 1000.0), 0.0};
    for (const scoring::ScoreKind kind : scoring::AllScoreKinds()) {
      finite &= std::isfinite(scoring::Score(row, kind));
    }
    finite &= std::isfinite(Softplus(v)) && std::isfinite(Sigmoid(v));
    const Matrix m(1, row.size(), row);
    const losses::LossValue conf = losses::LossConf(m);
    finite &= std::isfinite(conf.value) && AllFinite(conf.grad);
  }
  return {rel <= 1e-9 && finite,
          Format("joint_energy([1000]) = %.17g (relative error %.3g), all finite on "
                 "[-1000, 1000]: %s",
                 e, rel, finite ? "yes" : "no")};
}

Outcome DilationProperties() {
  Rng rng(19);
  double worst = 0.0;
  bool ok = true;
  for (int pair = 0; pair < 20; ++pair) {
    const std::size_t n = 4 + rng.Index(8), d = 2 + rng.Index(6);
    const Matrix a = test::RandomMatrix(n, d, rng);
    const Matrix b = test::RandomMatrix(n, d, rng, 2.0);
    const std::size_t k = 1 + rng.Index(std::min(n, d));
    const double ab = oesel::DilationDistance(a, b, k);
    ok &= ab >= 0.0 && ab == oesel::DilationDistance(b, a, k) &&
          oesel::DilationDistance(a, a, k) == 0.0;
    const Matrix pa = Matmul(test::RandomOrthogonal(n, rng), a);
    const Matrix aq = Matmul(a, test::RandomOrthogonal(d, rng));
    worst = std::max({worst, std::abs(oesel::DilationDistance(pa, b, k) - ab),
                      std::abs(oesel::DilationDistance(aq, b, k) - ab)});
  }
  const std::vector<oesel::CandidateDistance> table = test::PascalDistances();
  const std::string selected = oesel::SelectOe(table);
  return {ok && worst <= 1e-8 && selected == test::kPascalExpectedOe,
          Format("symmetric, non-negative, zero on identical: %s; orthogonal drift %.3g "
                 "(<= 1e-8); PASCAL selection %s",
                 ok ? "yes" : "no", worst, selected.c_str())};
}

struct Arm {
  experiment::Evaluation eval;
  double auroc() const { return eval.detection.auroc; }
};

// AUROC at the first tail point with at least half of the head classes removed.
double TailAuroc(const Arm& arm, std::size_t head_classes) {
  for (const metrics::TailPoint& p : arm.eval.tail.points) {
    if (2 * p.removed_head_classes >= head_classes) return p.auroc;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double TailDrop(const Arm& arm) {
  return arm.eval.tail.points.front().auroc - arm.eval.tail.points.back().auroc;
}

struct SyntheticOutcomes {
  Outcome directional;
  Outcome ablation;
};

SyntheticOutcomes Synthetic() {
  const auto start = Clock::now();
  int pass_a = 0, pass_b = 0, pass_c = 0, pass_ablation = 0;
  std::ostringstream seeds_log;
  const std::vector<double> alphas = {10, 1, 0.1, 0.01, 0.001};
  const std::vector<double> betas = {1, 0.1, 0.01, 0.001, 0.0001};
  for (int s = 0; s < kSeeds; ++s) {
    synth::SynthSpec spec;
    spec.seed = static_cast<std::uint64_t>(s);
    const synth::SynthData data = synth::Generate(spec);
    const experiment::ValidationSplit split =
        experiment::SplitForValidation(data.train, data.oe, 0.2, spec.seed);
    model::EdgeConfig base;
    base.seed = spec.seed;
    base.transform_epoch = base.epochs / 2;

    const experiment::EvaluationOptions options;
    const std::vector<std::int64_t> counts = split.id_fit.class_counts();
    auto evaluate = [&](const model::MlpModel& m) {
      return Arm{experiment::Evaluate(m, data.test, data.ood, counts, options)};
    };
    auto train_edge = [&](double alpha, double beta) {
      model::EdgeConfig c = base;
      c.alpha = alpha;
      c.beta = beta;
      return evaluate(model::TrainEdge(split.id_fit, split.oe_fit, c).model);
    };

    model::EdgeConfig bce_config = base;
    bce_config.alpha = 0.0;
    bce_config.beta = 0.0;
    const Arm bce = evaluate(model::TrainBce(split.id_fit, bce_config).model);

    const std::vector<experiment::GridAxis> axes = {{"alpha", alphas}, {"beta", betas}};
    const std::vector<model::EdgeConfig> grid = experiment::ExpandGrid(base, axes);
    const experiment::SweepResult sweep = experiment::SweepEdge(split, grid, options.kind);
    const experiment::SweepCell& best = sweep.cells[sweep.best];
    const Arm edge = evaluate(best.model);

    const std::size_t head = spec.num_classes / 2;
    const bool a = edge.eval.detection.fpr95 < bce.eval.detection.fpr95;
    const bool b = TailAuroc(edge, head) > TailAuroc(bce, head);
    const bool c = TailDrop(edge) <= 0.5 * TailDrop(bce);
    pass_a += a;
    pass_b += b;
    pass_c += c;

    const Arm conf = train_edge(best.config.alpha, 0.0);
    const Arm gap = train_edge(0.0, best.config.beta);
    const bool ablation = conf.auroc() > bce.auroc() && gap.auroc() > bce.auroc() &&
                          edge.auroc() >= conf.auroc() && edge.auroc() >= gap.auroc();
    pass_ablation += ablation;

    std::printf(
        "  seed %d: BCE fpr95 %.4f tail %.4f drop %.4f | EDGE(alpha %g, beta %g) fpr95 %.4f "
        "tail %.4f drop %.4f | auroc BCE %.4f conf %.4f gap %.4f full %.4f\n",
        s, bce.eval.detection.fpr95, TailAuroc(bce, head), TailDrop(bce), best.config.alpha,
        best.config.beta, edge.eval.detection.fpr95, TailAuroc(edge, head), TailDrop(edge),
        bce.auroc(), conf.auroc(), gap.auroc(), edge.auroc());
    std::fflush(stdout);
  }
  const double t = Seconds(start);
  SyntheticOutcomes out;
  out.directional = {
      pass_a >= kSeedsRequired && pass_b >= kSeedsRequired && pass_c >= kSeedsRequired &&
          t < 300.0,
      Format("seeds passing (need %d/%d): lower fpr95 %d, higher tail auroc %d, "
             "drop at most half %d; %.1f s for criteria 5 and 6 (< 300 s)",
             kSeedsRequired, kSeeds, pass_a, pass_b, pass_c, t)};
  out.ablation = {pass_ablation >= kSeedsRequired,
                  Format("seeds where conf-only and gap-only beat BCE and full is no worse "
                         "than either: %d/%d (need %d)",
                         pass_ablation, kSeeds, kSeedsRequired)};
  return out;
}

int Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::RunCli(args, out, err);
  if (code != 0) std::printf("  cli error: %s\n", err.str().c_str());
  return code;
}

Outcome Determinism(const test::TempDir& dir) {
  bool ok = true;
  for (const char* run : {"a", "b"}) {
    const std::string root = (dir / run).string();
    ok &= Cli({"synth", "--seed", "7", "--out", root + "/data"}) == 0;
    ok &= Cli({"train", "--id", root + "/data/id_train", "--oe", root + "/data/oe", "--seed",
               "7", "--out", root + "/train"}) == 0;
  }
  if (!ok) return {false, "cli run failed"};
  std::size_t compared = 0, identical = 0;
  for (const char* split : {"id_train", "id_test", "oe", "ood"}) {
    for (const char* file : {"features.csv", "labels.csv", "meta.json"}) {
      const std::string rel = std::string("data/") + split + "/" + file;
      if (!std::filesystem::exists(dir / "a" / rel)) continue;
      ++compared;
      identical += test::ReadFileBytes(dir / "a" / rel) == test::ReadFileBytes(dir / "b" / rel);
    }
  }
  for (const char* rel : {"train/checkpoint.json", "train/history.csv"}) {
    ++compared;
    identical += test::ReadFileBytes(dir / "a" / rel) == test::ReadFileBytes(dir / "b" / rel);
  }
  return {identical == compared,
          Format("%zu/%zu dataset and checkpoint files byte-identical across reruns", identical,
                 compared)};
}

Outcome Schedule(const test::TempDir& dir) {
  const model::EdgeConfig defaults;
  const std::size_t tau = defaults.epochs / 2;
  if (defaults.transform_epoch != tau) return {false, "default config is not tau = T/2"};
  const CsvTable h = ReadCsv(dir / "a/train/history.csv");
  std::size_t column = 0;
  while (column < h.header.size() && h.header[column] != "beta_effective") ++column;
  if (column == h.header.size() || h.rows.size() != defaults.epochs) {
    return {false, "history is missing epochs or the beta_effective column"};
  }
  std::size_t leading_zero = 0;
  while (leading_zero < h.rows.size() && ParseDouble(h.rows[leading_zero][column]) == 0.0) {
    ++leading_zero;
  }
  bool rest_nonzero = true;
  for (std::size_t e = leading_zero; e < h.rows.size(); ++e) {
    rest_nonzero &= ParseDouble(h.rows[e][column]) == defaults.beta;
  }
  return {leading_zero == tau && rest_nonzero,
          Format("T = %zu, tau = %zu: beta_effective is 0 for the first %zu epochs and beta "
                 "afterwards: %s",
                 defaults.epochs, tau, leading_zero, rest_nonzero ? "yes" : "no")};
}

void Report(int id, const char* name, const Outcome& o, bool& all) {
  std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
  all &= o.pass;
}

int Main() {
  bool all = true;
  Report(1, "gradient correctness", Gradients(), all);
  Report(2, "metric oracle equivalence", MetricOracles(), all);
  Report(3, "joint energy stability", EnergyStability(), all);
  Report(4, "dilation distance properties", DilationProperties(), all);
  const SyntheticOutcomes synthetic = Synthetic();
  Report(5, "directional reproduction", synthetic.directional, all);
  Report(6, "ablation direction", synthetic.ablation, all);
  const test::TempDir dir("acceptance");
  Report(7, "determinism", Determinism(dir), all);
  Report(8, "schedule conformance", Schedule(dir), all);
  return all ? 0 : 1;
}

}  // namespace
}  // namespace edge

int main() { return edge::Main(); }
