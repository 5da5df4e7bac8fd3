#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dcsign/jpeg/types.hpp"

namespace dcsign {

struct CorpusImage {
  std::string id;
  jpeg::PixelImage pixels;
};

// Every *.ppm / *.pgm in `dir`, sorted by file name; id = file stem.
std::vector<CorpusImage> load_corpus(const std::filesystem::path& dir);

struct ExperimentConfig {
  std::vector<jpeg::QualityFactor> db_qfs;     // one database per entry
  std::vector<jpeg::QualityFactor> query_qfs;  // second-compression qualities
  int th = 14;
  std::vector<CorpusImage> corpus;
};

// Percentages; nullopt where the denominator is zero.
struct PrecisionRecall {
  std::optional<double> precision;
  std::optional<double> recall;
};

PrecisionRecall precision_recall(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn);

// "90.00", or "n/a" for an undefined ratio.
std::string format_percent(const std::optional<double>& value);

struct PRCell {
  int db_qf = 0;
  std::optional<int> query_qf;  // nullopt: aggregate over the database
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t queries = 0;

  PrecisionRecall pr() const { return precision_recall(tp, fp, fn); }
};

struct PRReport {
  // Per database: one cell per query QF in config order, then the aggregate.
  std::vector<PRCell> cells;
  std::size_t corpus_size = 0;
  int th = 0;

  std::vector<PRCell> aggregates() const;
};

// For each database QF: enroll every original compressed once at that QF
// into a fresh store, then query with every original re-compressed at each
// query QF. TP: own id returned; FP: each other id returned; FN: own id
// missing.
PRReport run_experiment(const ExperimentConfig& cfg);

// Aggregate rows laid out like a scheme/database/p/r table, followed by the
// per-query-QF breakdown.
std::string format_pr_table(const PRReport& report);
// Header "db_qf,query_qf,tp,fp,fn,precision,recall"; aggregate rows use
// query_qf "all".
std::string format_pr_csv(const PRReport& report);

}  // namespace dcsign
