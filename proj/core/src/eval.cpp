#include "dcsign/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "dcsign/errors.hpp"
#include "dcsign/feature.hpp"
#include "dcsign/identify.hpp"
#include "dcsign/io.hpp"
#include "dcsign/jpeg/codec.hpp"
#include "dcsign/jpeg/pixels.hpp"
#include "dcsign/parallel.hpp"
#include "dcsign/store.hpp"

namespace dcsign {

std::vector<CorpusImage> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".ppm" || ext == ".pgm")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusImage> corpus;
  corpus.reserve(files.size());
  for (const auto& f : files) {
    try {
      corpus.push_back({f.stem().string(), read_pnm(f)});
    } catch (const Error& e) {
      throw IoError(f.string() + ": " + e.what());
    }
  }
  return corpus;
}

PrecisionRecall precision_recall(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn) {
  PrecisionRecall pr;
  if (tp + fp > 0) pr.precision = 100.0 * static_cast<double>(tp) / static_cast<double>(tp + fp);
  if (tp + fn > 0) pr.recall = 100.0 * static_cast<double>(tp) / static_cast<double>(tp + fn);
  return pr;
}

std::string format_percent(const std::optional<double>& value) {
  if (!value) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *value);
  return buf;
}

std::vector<PRCell> PRReport::aggregates() const {
  std::vector<PRCell> out;
  std::copy_if(cells.begin(), cells.end(), std::back_inserter(out), [](const PRCell& c) { return !c.query_qf; });
  return out;
}

namespace {

struct QueryOutcome {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
};

}  // namespace

PRReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.corpus.empty()) throw InvalidArgument("experiment corpus is empty");
  if (cfg.db_qfs.empty() || cfg.query_qfs.empty()) throw InvalidArgument("experiment QF sets must be non-empty");
  std::unordered_set<std::string> ids;
  for (const auto& img : cfg.corpus)
    if (!ids.insert(img.id).second) throw InvalidArgument("duplicate corpus id: " + img.id);

  const std::size_t n = cfg.corpus.size();
  const std::size_t nq = cfg.query_qfs.size();
  PRReport report;
  report.corpus_size = n;
  report.th = cfg.th;

  for (const auto db_qf : cfg.db_qfs) {
    // Single-compressed versions O'_i, shared by enrollment and query generation.
    std::vector<jpeg::CoefficientImage> singles(n);
    std::vector<std::vector<std::uint8_t>> single_bytes(n);
    parallel_for(n, [&](std::size_t i) {
      singles[i] = jpeg::pixels_to_coefficients(cfg.corpus[i].pixels, db_qf);
      single_bytes[i] = jpeg::encode_file(singles[i]);
    });

    FeatureStore store = FeatureStore::in_memory();
    for (std::size_t i = 0; i < n; ++i) store.enroll(singles[i], cfg.th, cfg.corpus[i].id);

    std::vector<QueryOutcome> outcomes(n * nq);
    parallel_for(n * nq, [&](std::size_t task) {
      const std::size_t i = task / nq;
      const std::size_t q = task % nq;
      const auto query = jpeg::decode_file(jpeg::recompress(single_bytes[i], cfg.query_qfs[q]));
      auto& o = outcomes[task];
      for (const auto& id : query_store(store, query)) {
        if (id == cfg.corpus[i].id)
          ++o.tp;
        else
          ++o.fp;
      }
      if (o.tp == 0) o.fn = 1;
    });

    PRCell total;
    total.db_qf = db_qf.value();
    for (std::size_t q = 0; q < nq; ++q) {
      PRCell cell;
      cell.db_qf = db_qf.value();
      cell.query_qf = cfg.query_qfs[q].value();
      for (std::size_t i = 0; i < n; ++i) {
        const auto& o = outcomes[i * nq + q];
        cell.tp += o.tp;
        cell.fp += o.fp;
        cell.fn += o.fn;
      }
      cell.queries = n;
      total.tp += cell.tp;
      total.fp += cell.fp;
      total.fn += cell.fn;
      total.queries += cell.queries;
      report.cells.push_back(cell);
    }
    report.cells.push_back(total);
  }
  return report;
}

std::string format_pr_table(const PRReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "originals: %zu  th: %d\n\n", report.corpus_size, report.th);
  out += line;
  out += "scheme    database       p[%]     r[%]\n";
  int db = 0;
  for (const auto& c : report.aggregates()) {
    char name[32];
    std::snprintf(name, sizeof name, "DB%d (QF=%d)", ++db, c.db_qf);
    const auto pr = c.pr();
    std::snprintf(line, sizeof line, "%-9s %-12s %8s %8s\n", db == 1 ? "proposed" : "", name,
                  format_percent(pr.precision).c_str(), format_percent(pr.recall).c_str());
    out += line;
  }
  out += "\ndb_qf  query_qf  queries      tp      fp      fn     p[%]     r[%]\n";
  for (const auto& c : report.cells) {
    const auto pr = c.pr();
    const std::string qq = c.query_qf ? std::to_string(*c.query_qf) : "all";
    std::snprintf(line, sizeof line, "%5d  %8s  %7llu  %6llu  %6llu  %6llu  %7s  %7s\n", c.db_qf, qq.c_str(),
                  static_cast<unsigned long long>(c.queries), static_cast<unsigned long long>(c.tp),
                  static_cast<unsigned long long>(c.fp), static_cast<unsigned long long>(c.fn),
                  format_percent(pr.precision).c_str(), format_percent(pr.recall).c_str());
    out += line;
  }
  return out;
}

std::string format_pr_csv(const PRReport& report) {
  std::string out = "db_qf,query_qf,tp,fp,fn,precision,recall\n";
  for (const auto& c : report.cells) {
    const auto pr = c.pr();
    out += std::to_string(c.db_qf) + "," + (c.query_qf ? std::to_string(*c.query_qf) : "all") + "," +
           std::to_string(c.tp) + "," + std::to_string(c.fp) + "," + std::to_string(c.fn) + "," +
           format_percent(pr.precision) + "," + format_percent(pr.recall) + "\n";
  }
  return out;
}

}  // namespace dcsign
