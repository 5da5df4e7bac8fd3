#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "dcsign/calibrate.hpp"
#include "dcsign/errors.hpp"
#include "dcsign/eval.hpp"
#include "dcsign/feature.hpp"
#include "dcsign/identify.hpp"
#include "dcsign/io.hpp"
#include "dcsign/jpeg/codec.hpp"
#include "dcsign/jpeg/pixels.hpp"
#include "dcsign/store.hpp"

namespace dcsign::cli {

namespace {

constexpr int kDefaultThreshold = 14;

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::vector<jpeg::QualityFactor> to_qfs(const std::vector<int>& values, const char* flag) {
  if (values.empty()) throw InvalidArgument(std::string(flag) + " needs at least one quality factor");
  std::vector<jpeg::QualityFactor> qfs;
  for (int v : values) qfs.emplace_back(v);
  return qfs;
}

struct Options {
  std::string db;
  int th = kDefaultThreshold;
  std::string id;
  std::vector<std::string> files;
  int quality = 0;
  std::string in;
  std::string out;
  std::vector<int> qf_singles;
  std::vector<int> qf_doubles;
  std::vector<int> db_qfs;
  std::vector<int> query_qfs;
  std::string dir;
  std::string csv;
};

int cmd_enroll(const Options& o, std::ostream& out) {
  if (!o.id.empty() && o.files.size() != 1) throw InvalidArgument("--id requires exactly one input file");
  FeatureStore store = FeatureStore::open(o.db, FeatureStore::Mode::kReadWrite);
  for (const auto& file : o.files) {
    const auto bytes = read_file(file);
    const auto img = jpeg::decode_file(bytes);
    out << store.enroll(img, o.th, o.id.empty() ? sha256_hex(bytes) : o.id) << '\n';
  }
  return kOk;
}

int cmd_identify(const Options& o, std::ostream& out) {
  const FeatureStore store = FeatureStore::open(o.db, FeatureStore::Mode::kReadOnly);
  const auto query = jpeg::decode_file(read_file(o.in));
  const auto ids = query_store(store, query);
  for (const auto& id : ids) out << id << '\n';
  return ids.empty() ? kNoMatch : kOk;
}

int cmd_recompress(const Options& o) {
  write_file(o.out, jpeg::recompress(read_file(o.in), jpeg::QualityFactor(o.quality)));
  return kOk;
}

int cmd_decode(const Options& o) {
  write_pnm(o.out, jpeg::coefficients_to_pixels(jpeg::decode_file(read_file(o.in))));
  return kOk;
}

int cmd_encode(const Options& o) {
  const jpeg::QualityFactor qf(o.quality);
  write_file(o.out, jpeg::encode_file(jpeg::pixels_to_coefficients(read_pnm(o.in), qf)));
  return kOk;
}

std::vector<jpeg::PixelImage> pixels_of(std::vector<CorpusImage> corpus, const std::string& dir) {
  if (corpus.empty()) throw IoError("no .ppm/.pgm images in " + dir);
  std::vector<jpeg::PixelImage> out;
  out.reserve(corpus.size());
  for (auto& c : corpus) out.push_back(std::move(c.pixels));
  return out;
}

int cmd_calibrate(const Options& o, std::ostream& out) {
  const auto singles = to_qfs(o.qf_singles, "--qf-singles");
  const auto doubles = to_qfs(o.qf_doubles, "--qf-doubles");
  const auto corpus = pixels_of(load_corpus(o.dir), o.dir);
  const auto report = calibrate_threshold(corpus, singles, doubles);
  out << format_calibration_table(report) << '\n' << format_calibration_keys(report);
  return kOk;
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  ExperimentConfig cfg;
  cfg.db_qfs = to_qfs(o.db_qfs, "--db-qfs");
  cfg.query_qfs = to_qfs(o.query_qfs, "--query-qfs");
  cfg.th = o.th;
  cfg.corpus = load_corpus(o.dir);
  if (cfg.corpus.empty()) throw IoError("no .ppm/.pgm images in " + o.dir);
  const auto report = run_experiment(cfg);
  out << format_pr_table(report);
  if (!o.csv.empty()) {
    const std::string csv = format_pr_csv(report);
    write_file(o.csv, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()), csv.size()));
  }
  return kOk;
}

void describe(const TernaryFeature& f, std::ostream& out) {
  std::size_t pos = 0, zero = 0, neg = 0;
  for (auto c : f.codes) (c > 0 ? pos : c < 0 ? neg : zero)++;
  out << "id=" << f.image_id << " width=" << f.width << " height=" << f.height << " M=" << f.block_count()
      << " th=" << f.th << " plus=" << pos << " zero=" << zero << " minus=" << neg << '\n';
}

int cmd_inspect(const Options& o, std::ostream& out, std::ostream& err) {
  const FeatureStore store = FeatureStore::open(o.db, FeatureStore::Mode::kReadOnly);
  if (!o.id.empty()) {
    const auto* f = store.find(o.id);
    if (!f) {
      err << "no record with id " << o.id << '\n';
      return kNoMatch;
    }
    describe(*f, out);
    return kOk;
  }
  out << "records=" << store.size() << '\n';
  for (const auto& f : store.records()) describe(f, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"DC-sign JPEG image identification", "dcsign"};
  app.require_subcommand(1);
  Options o;

  auto* enroll = app.add_subcommand("enroll", "Enroll single-compressed JPEGs into a feature store");
  enroll->add_option("--db", o.db, "Feature store path")->required();
  enroll->add_option("--th", o.th, "Enrollment threshold (quantized DC units)")->check(CLI::Range(0, kMaxThreshold));
  enroll->add_option("--id", o.id, "Image id (single file only; default: SHA-256 of the file)");
  enroll->add_option("files", o.files, "JPEG files")->required();

  auto* identify = app.add_subcommand("identify", "Print ids of enrolled images sharing the query's original");
  identify->add_option("--db", o.db, "Feature store path")->required();
  identify->add_option("file", o.in, "Query JPEG")->required();

  auto* recompress = app.add_subcommand("recompress", "Decode and re-encode a JPEG at a new quality");
  recompress->add_option("--quality", o.quality, "Quality factor 1-100")->required();
  recompress->add_option("in", o.in)->required();
  recompress->add_option("out", o.out)->required();

  auto* calibrate = app.add_subcommand("calibrate", "Derive the threshold from sign inversions over a corpus");
  calibrate->add_option("--qf-singles", o.qf_singles, "First-compression qualities")->delimiter(',')->required();
  calibrate->add_option("--qf-doubles", o.qf_doubles, "Re-compression qualities")->delimiter(',')->required();
  calibrate->add_option("dir", o.dir, "Directory of .ppm/.pgm originals")->required();

  auto* evaluate = app.add_subcommand("evaluate", "Precision/recall experiment over a corpus");
  evaluate->add_option("--db-qfs", o.db_qfs, "Database qualities")->delimiter(',')->required();
  evaluate->add_option("--query-qfs", o.query_qfs, "Query re-compression qualities")->delimiter(',')->required();
  evaluate->add_option("--th", o.th, "Enrollment threshold")->check(CLI::Range(0, kMaxThreshold));
  evaluate->add_option("--csv", o.csv, "Also write the per-cell CSV here");
  evaluate->add_option("dir", o.dir, "Directory of .ppm/.pgm originals")->required();

  auto* decode = app.add_subcommand("decode", "Decode a JPEG to PPM/PGM");
  decode->add_option("in", o.in)->required();
  decode->add_option("out", o.out)->required();

  auto* encode = app.add_subcommand("encode", "Encode a PPM/PGM as baseline JPEG");
  encode->add_option("--quality", o.quality, "Quality factor 1-100")->required();
  encode->add_option("in", o.in)->required();
  encode->add_option("out", o.out)->required();

  auto* inspect = app.add_subcommand("inspect", "Dump feature records");
  inspect->add_option("--db", o.db, "Feature store path")->required();
  inspect->add_option("--id", o.id, "Only this record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "dcsign: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (enroll->parsed()) return cmd_enroll(o, out);
    if (identify->parsed()) return cmd_identify(o, out);
    if (recompress->parsed()) return cmd_recompress(o);
    if (calibrate->parsed()) return cmd_calibrate(o, out);
    if (evaluate->parsed()) return cmd_evaluate(o, out);
    if (decode->parsed()) return cmd_decode(o);
    if (encode->parsed()) return cmd_encode(o);
    if (inspect->parsed()) return cmd_inspect(o, out, err);
  } catch (const InvalidArgument& e) {
    err << "dcsign: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "dcsign: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace dcsign::cli
