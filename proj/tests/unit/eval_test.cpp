#include <gtest/gtest.h>

#include <filesystem>

#include "dcsign/calibrate.hpp"
#include "dcsign/errors.hpp"
#include "dcsign/eval.hpp"
#include "dcsign/io.hpp"
#include "generators.hpp"

using namespace dcsign;
using dcsign::testing::Rng;
using jpeg::QualityFactor;

namespace {

std::vector<CorpusImage> smooth_corpus(std::uint64_t seed, int n, int size) {
  Rng rng(seed);
  std::vector<CorpusImage> out;
  for (int i = 0; i < n; ++i)
    out.push_back({"img" + std::to_string(i), dcsign::testing::random_smooth_image(rng, size, size, i % 2 ? 3 : 1)});
  return out;
}

std::vector<CorpusImage> harsh_corpus(std::uint64_t seed, int n, int size) {
  Rng rng(seed);
  std::vector<CorpusImage> out;
  for (int i = 0; i < n; ++i)
    out.push_back({"h" + std::to_string(i), dcsign::testing::random_harsh_image(rng, size, size, 3)});
  return out;
}

}  // namespace

TEST(PrecisionRecall, Examples) {
  auto pr = precision_recall(9, 1, 0);
  EXPECT_EQ(format_percent(pr.precision), "90.00");
  EXPECT_EQ(format_percent(pr.recall), "100.00");
  pr = precision_recall(186, 0, 0);
  EXPECT_EQ(format_percent(pr.precision), "100.00");
  EXPECT_EQ(format_percent(pr.recall), "100.00");
  pr = precision_recall(0, 0, 5);
  EXPECT_EQ(format_percent(pr.precision), "n/a");
  EXPECT_EQ(format_percent(pr.recall), "0.00");
  pr = precision_recall(0, 0, 0);
  EXPECT_FALSE(pr.precision);
  EXPECT_FALSE(pr.recall);
  EXPECT_EQ(format_percent(precision_recall(2, 1, 0).precision), "66.67");
}

TEST(Experiment, SingleImage) {
  ExperimentConfig cfg{{QualityFactor(90)}, {QualityFactor(75)}, 14, smooth_corpus(1, 1, 64)};
  const auto r = run_experiment(cfg);
  ASSERT_EQ(r.cells.size(), 2u);
  EXPECT_EQ(r.cells[0].tp, 1u);
  EXPECT_EQ(r.cells[0].fp, 0u);
  EXPECT_EQ(r.cells[0].fn, 0u);
  EXPECT_EQ(r.cells[0].query_qf, 75);
  EXPECT_FALSE(r.cells[1].query_qf);
  EXPECT_EQ(r.aggregates().size(), 1u);
}

TEST(Experiment, RejectsBadConfig) {
  ExperimentConfig cfg{{QualityFactor(90)}, {QualityFactor(75)}, 14, {}};
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
  cfg.corpus = smooth_corpus(2, 2, 16);
  cfg.corpus[1].id = cfg.corpus[0].id;
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
}

TEST(Experiment, CountConservation) {
  ExperimentConfig cfg{{QualityFactor(95), QualityFactor(75)}, {QualityFactor(40), QualityFactor(80)}, 0,
                       harsh_corpus(3, 6, 32)};
  const auto r = run_experiment(cfg);
  ASSERT_EQ(r.cells.size(), 6u);
  for (const auto& c : r.cells) {
    const std::uint64_t expected = c.query_qf ? 6 : 12;
    EXPECT_EQ(c.queries, expected);
    EXPECT_EQ(c.tp + c.fn, c.queries);
  }
}

TEST(Experiment, Deterministic) {
  ExperimentConfig cfg{{QualityFactor(85)}, {QualityFactor(71), QualityFactor(80)}, 3, harsh_corpus(4, 5, 40)};
  EXPECT_EQ(format_pr_csv(run_experiment(cfg)), format_pr_csv(run_experiment(cfg)));
  EXPECT_EQ(format_pr_table(run_experiment(cfg)), format_pr_table(run_experiment(cfg)));
}

TEST(Experiment, CalibratedThresholdHasNoFalseNegatives) {
  const auto corpus = harsh_corpus(5, 6, 48);
  const std::vector<QualityFactor> dbs{QualityFactor(95), QualityFactor(85)};
  const std::vector<QualityFactor> qs{QualityFactor(50), QualityFactor(75)};
  std::vector<jpeg::PixelImage> px;
  for (const auto& c : corpus) px.push_back(c.pixels);
  const auto cal = calibrate_threshold(px, dbs, qs);
  ASSERT_GT(cal.inversion_count, 0u);
  const auto r = run_experiment({dbs, qs, cal.recommended_th, corpus});
  for (const auto& c : r.cells) EXPECT_EQ(c.fn, 0u);
}

TEST(Format, CsvAndTable) {
  PRReport r;
  r.corpus_size = 10;
  r.th = 14;
  r.cells = {{95, 71, 9, 1, 0, 9}, {95, std::nullopt, 9, 1, 0, 9}, {85, std::nullopt, 0, 0, 0, 0}};
  EXPECT_EQ(format_pr_csv(r),
            "db_qf,query_qf,tp,fp,fn,precision,recall\n"
            "95,71,9,1,0,90.00,100.00\n"
            "95,all,9,1,0,90.00,100.00\n"
            "85,all,0,0,0,n/a,n/a\n");
  const auto t = format_pr_table(r);
  EXPECT_NE(t.find("proposed  DB1 (QF=95)     90.00   100.00"), std::string::npos) << t;
  EXPECT_NE(t.find("DB2 (QF=85)"), std::string::npos);
}

TEST(Corpus, LoadsSortedPnmFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "dcsign_eval_corpus";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  write_pnm(dir / "b.pgm", dcsign::testing::uniform_image(8, 8, 1, 1));
  write_pnm(dir / "a.ppm", dcsign::testing::uniform_image(8, 8, 3, 2));
  write_file(dir / "notes.txt", std::vector<std::uint8_t>{'x'});
  auto corpus = load_corpus(dir);
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus[0].id, "a");
  EXPECT_EQ(corpus[0].pixels.channels, 3);
  EXPECT_EQ(corpus[1].id, "b");
  write_file(dir / "c.pgm", std::vector<std::uint8_t>{'P', '5'});
  EXPECT_THROW(load_corpus(dir), IoError);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(load_corpus(dir), IoError);
}
