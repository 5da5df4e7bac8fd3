#include "dcsign/jpeg/codec.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <string>

#include "dcsign/errors.hpp"
#include "dcsign/jpeg/quant_tables.hpp"
#include "huffman.hpp"

namespace dcsign::jpeg {

namespace {

using detail::HuffmanDecoder;
using detail::HuffmanEncoder;
using detail::HuffmanSpec;

constexpr std::uint8_t kSOI = 0xD8;
constexpr std::uint8_t kEOI = 0xD9;
constexpr std::uint8_t kSOS = 0xDA;
constexpr std::uint8_t kDQT = 0xDB;
constexpr std::uint8_t kDNL = 0xDC;
constexpr std::uint8_t kDRI = 0xDD;
constexpr std::uint8_t kDHT = 0xC4;
constexpr std::uint8_t kDAC = 0xCC;
constexpr std::uint8_t kSOF0 = 0xC0;
constexpr std::uint8_t kRST0 = 0xD0;
constexpr std::uint8_t kAPP0 = 0xE0;

std::string marker_name(std::uint8_t m) {
  char buf[16];
  if (m >= 0xC0 && m <= 0xCF && m != kDHT && m != 0xC8 && m != kDAC)
    std::snprintf(buf, sizeof buf, "SOF%d", m - 0xC0);
  else if (m == kDAC)
    return "DAC";
  else if (m == kDNL)
    return "DNL";
  else
    std::snprintf(buf, sizeof buf, "0xFF%02X", m);
  return buf;
}

// ---------------------------------------------------------------- decoding

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::size_t pos() const { return pos_; }
  std::size_t size() const { return data_.size(); }
  bool at_end() const { return pos_ >= data_.size(); }

  std::uint8_t u8() {
    if (pos_ >= data_.size()) throw CorruptStream(pos_, "unexpected end of data");
    return data_[pos_++];
  }
  std::uint16_t u16() {
    const std::uint16_t hi = u8();
    return static_cast<std::uint16_t>(hi << 8 | u8());
  }
  std::uint8_t peek(std::size_t ahead = 0) const {
    if (pos_ + ahead >= data_.size()) throw CorruptStream(pos_ + ahead, "unexpected end of data");
    return data_[pos_ + ahead];
  }
  void skip(std::size_t n) {
    if (n > data_.size() - pos_) throw CorruptStream(data_.size(), "segment runs past end of data");
    pos_ += n;
  }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

// Entropy-coded segment reader: undoes 0xFF00 stuffing and refuses to read
// across a marker.
class BitReader {
 public:
  explicit BitReader(ByteReader& in) : in_(in) {}

  int bit() {
    if (nbits_ == 0) {
      const std::size_t at = in_.pos();
      if (in_.at_end()) throw CorruptStream(at, "entropy-coded data truncated");
      const std::uint8_t b = in_.u8();
      if (b == 0xFF) {
        if (in_.at_end()) throw CorruptStream(in_.pos(), "entropy-coded data truncated");
        const std::uint8_t next = in_.peek();
        if (next != 0x00) throw CorruptStream(at, "entropy-coded data interrupted by marker " + marker_name(next));
        in_.skip(1);
      }
      byte_ = b;
      nbits_ = 8;
    }
    --nbits_;
    return (byte_ >> nbits_) & 1;
  }

  std::int32_t bits(int n) {
    std::int32_t v = 0;
    for (int i = 0; i < n; ++i) v = (v << 1) | bit();
    return v;
  }

  int decode(const HuffmanDecoder& h) {
    std::int32_t code = bit();
    int len = 1;
    while (code > h.maxcode[len]) {
      if (++len > 16) throw CorruptStream(in_.pos(), "invalid Huffman code");
      code = (code << 1) | bit();
    }
    return h.symbols[h.valptr[len] + code - h.mincode[len]];
  }

  void reset() { nbits_ = 0; }

 private:
  ByteReader& in_;
  std::uint8_t byte_ = 0;
  int nbits_ = 0;
};

std::int32_t extend(std::int32_t v, int s) { return v < (1 << (s - 1)) ? v - (1 << s) + 1 : v; }

struct FrameComponent {
  std::uint8_t id;
  int h;
  int v;
  int tq;
  bool scanned = false;
  std::optional<QuantMatrix> quant;
};

class Decoder {
 public:
  explicit Decoder(std::span<const std::uint8_t> bytes) : in_(bytes) {}

  CoefficientImage run() {
    if (in_.size() < 2 || in_.u8() != 0xFF || in_.u8() != kSOI) throw CorruptStream(0, "missing SOI marker");
    for (;;) {
      const auto [marker, at] = next_marker();
      if (marker == kEOI) break;
      if (marker == kSOF0) {
        read_sof(at);
      } else if (marker == kDHT) {
        read_dht();
      } else if (marker == kDQT) {
        read_dqt();
      } else if (marker == kDRI) {
        const auto len = in_.u16();
        if (len != 4) throw CorruptStream(at, "bad DRI length");
        restart_interval_ = in_.u16();
      } else if (marker == kSOS) {
        read_sos(at);
      } else if ((marker >= 0xC1 && marker <= 0xCF && marker != 0xC8) || marker == kDNL) {
        // SOF1..SOF15 (minus DHT/JPG), DAC, DNL
        throw UnsupportedFormat(marker_name(marker), "only baseline sequential Huffman (SOF0) is supported");
      } else if (marker >= kRST0 && marker <= kRST0 + 7) {
        throw CorruptStream(at, "restart marker outside entropy-coded data");
      } else if (marker == 0x01 || marker == kSOI) {
        throw CorruptStream(at, "unexpected marker " + marker_name(marker));
      } else {
        in_.skip(segment_length(at));
      }
    }
    if (!frame_seen_) throw CorruptStream(in_.pos(), "no SOF0 frame before EOI");
    for (std::size_t i = 0; i < frame_.size(); ++i)
      if (!frame_[i].scanned) throw CorruptStream(in_.pos(), "component " + std::to_string(i) + " never scanned");
    for (std::size_t i = 0; i < frame_.size(); ++i) img_.components[i].quant = *frame_[i].quant;
    return std::move(img_);
  }

 private:
  std::pair<std::uint8_t, std::size_t> next_marker() {
    const std::size_t at = in_.pos();
    if (in_.u8() != 0xFF) throw CorruptStream(at, "expected marker");
    std::uint8_t m = in_.u8();
    while (m == 0xFF) m = in_.u8();
    return {m, at};
  }

  std::size_t segment_length(std::size_t at) {
    const auto len = in_.u16();
    if (len < 2) throw CorruptStream(at, "segment length below 2");
    return len - 2u;
  }

  void read_dqt() {
    const std::size_t at = in_.pos() - 2;
    const std::size_t len = segment_length(at);
    const std::size_t end = in_.pos() + len;
    while (in_.pos() < end) {
      const auto pq_tq = in_.u8();
      const int pq = pq_tq >> 4;
      const int tq = pq_tq & 15;
      if (tq > 3 || pq > 1) throw CorruptStream(in_.pos() - 1, "bad DQT table header");
      std::array<std::uint16_t, kBlockArea> natural{};
      for (int k = 0; k < kBlockArea; ++k) {
        const std::uint16_t v = pq ? in_.u16() : in_.u8();
        if (v == 0) throw CorruptStream(in_.pos() - 1, "zero quantizer entry");
        if (v > 255) throw UnsupportedFormat("DQT", "quantizer entries above 255");
        natural[kZigzagToNatural[k]] = v;
      }
      qtables_[tq] = QuantMatrix(natural);
    }
    if (in_.pos() != end) throw CorruptStream(in_.pos(), "DQT segment length mismatch");
  }

  void read_dht() {
    const std::size_t at = in_.pos() - 2;
    const std::size_t len = segment_length(at);
    const std::size_t end = in_.pos() + len;
    while (in_.pos() < end) {
      const std::size_t table_at = in_.pos();
      const auto tc_th = in_.u8();
      const int tc = tc_th >> 4;
      const int th = tc_th & 15;
      if (tc > 1 || th > 3) throw CorruptStream(table_at, "bad DHT table header");
      HuffmanSpec spec;
      std::size_t total = 0;
      for (auto& c : spec.counts) {
        c = in_.u8();
        total += c;
      }
      if (total > 256) throw CorruptStream(table_at, "DHT symbol count above 256");
      spec.symbols.resize(total);
      for (auto& s : spec.symbols) s = in_.u8();
      try {
        (tc == 0 ? dc_tables_ : ac_tables_)[th] = HuffmanDecoder(spec);
      } catch (const InvalidArgument& e) {
        throw CorruptStream(table_at, e.what());
      }
    }
    if (in_.pos() != end) throw CorruptStream(in_.pos(), "DHT segment length mismatch");
  }

  void read_sof(std::size_t at) {
    if (frame_seen_) throw CorruptStream(at, "multiple frames");
    const std::size_t len = segment_length(at);
    const std::size_t body = in_.pos();
    const int precision = in_.u8();
    if (precision != 8) throw UnsupportedFormat("SOF0", std::to_string(precision) + "-bit samples");
    const int height = in_.u16();
    const int width = in_.u16();
    if (height == 0) throw UnsupportedFormat("DNL", "image height deferred to DNL");
    if (width == 0) throw CorruptStream(at, "zero image width");
    const int nf = in_.u8();
    if (nf != 1 && nf != 3) throw UnsupportedFormat("SOF0", std::to_string(nf) + " components");
    if (len != 6u + 3u * nf) throw CorruptStream(at, "SOF0 length mismatch");
    for (int i = 0; i < nf; ++i) {
      FrameComponent c{};
      c.id = in_.u8();
      const auto hv = in_.u8();
      c.h = hv >> 4;
      c.v = hv & 15;
      c.tq = in_.u8();
      if (c.h < 1 || c.h > 4 || c.v < 1 || c.v > 4 || c.tq > 3)
        throw CorruptStream(body, "bad component specification");
      frame_.push_back(c);
    }
    img_.width = width;
    img_.height = height;
    if (nf == 1) {
      // A lone component is always coded non-interleaved at full resolution.
      frame_[0].h = frame_[0].v = 1;
      img_.subsampling = Subsampling::kNone;
    } else {
      const bool c_unit = frame_[1].h == 1 && frame_[1].v == 1 && frame_[2].h == 1 && frame_[2].v == 1;
      if (c_unit && frame_[0].h == 1 && frame_[0].v == 1)
        img_.subsampling = Subsampling::kNone;
      else if (c_unit && frame_[0].h == 2 && frame_[0].v == 2)
        img_.subsampling = Subsampling::k420;
      else
        throw UnsupportedFormat("SOF0", "chroma subsampling other than 4:4:4 or 4:2:0");
    }
    max_h_ = max_v_ = 1;
    for (const auto& c : frame_) {
      max_h_ = std::max(max_h_, c.h);
      max_v_ = std::max(max_v_, c.v);
    }
    for (const auto& c : frame_) {
      Component comp;
      comp.id = c.id;
      comp.h_samp = c.h;
      comp.v_samp = c.v;
      const int cw = (width * c.h + max_h_ - 1) / max_h_;
      const int ch = (height * c.v + max_v_ - 1) / max_v_;
      comp.blocks_wide = blocks_for(cw);
      comp.blocks_high = blocks_for(ch);
      comp.blocks.resize(static_cast<std::size_t>(comp.blocks_wide) * comp.blocks_high);
      img_.components.push_back(std::move(comp));
    }
    frame_seen_ = true;
  }

  void read_sos(std::size_t at) {
    if (!frame_seen_) throw CorruptStream(at, "SOS before SOF0");
    const std::size_t len = segment_length(at);
    const int ns = in_.u8();
    if (ns < 1 || ns > 4 || len != 4u + 2u * ns) throw CorruptStream(at, "bad SOS header");
    struct ScanComp {
      std::size_t index;
      const HuffmanDecoder* dc;
      const HuffmanDecoder* ac;
    };
    std::vector<ScanComp> comps;
    for (int i = 0; i < ns; ++i) {
      const auto id = in_.u8();
      const auto tables = in_.u8();
      auto it = std::find_if(frame_.begin(), frame_.end(), [&](const FrameComponent& c) { return c.id == id; });
      if (it == frame_.end()) throw CorruptStream(at, "SOS references unknown component");
      const auto idx = static_cast<std::size_t>(it - frame_.begin());
      const int td = tables >> 4;
      const int ta = tables & 15;
      if (td > 3 || ta > 3 || !dc_tables_[td].defined || !ac_tables_[ta].defined)
        throw CorruptStream(at, "SOS references undefined Huffman table");
      if (!qtables_[it->tq]) throw CorruptStream(at, "component quantizer table not defined");
      it->quant = *qtables_[it->tq];
      it->scanned = true;
      comps.push_back({idx, &dc_tables_[td], &ac_tables_[ta]});
    }
    const int ss = in_.u8();
    const int se = in_.u8();
    const int ahal = in_.u8();
    if (ss != 0 || se != 63 || ahal != 0) throw UnsupportedFormat("SOS", "spectral selection or successive approximation");

    BitReader bits(in_);
    std::vector<std::int32_t> pred(comps.size(), 0);
    auto decode_block = [&](std::size_t k, CoefficientBlock& out) {
      const auto& sc = comps[k];
      const int t = bits.decode(*sc.dc);
      if (t > 11) throw CorruptStream(in_.pos(), "DC magnitude category above 11");
      const std::int32_t diff = t ? extend(bits.bits(t), t) : 0;
      pred[k] += diff;
      if (pred[k] < -32768 || pred[k] > 32767) throw CorruptStream(in_.pos(), "DC value overflow");
      out.coeffs.fill(0);
      out.coeffs[0] = static_cast<std::int16_t>(pred[k]);
      for (int z = 1; z < kBlockArea;) {
        const int rs = bits.decode(*sc.ac);
        const int r = rs >> 4;
        const int s = rs & 15;
        if (s == 0) {
          if (r != 15) break;
          z += 16;
          continue;
        }
        z += r;
        if (z >= kBlockArea || s > 10) throw CorruptStream(in_.pos(), "AC run past end of block");
        out.coeffs[kZigzagToNatural[z]] = static_cast<std::int16_t>(extend(bits.bits(s), s));
        ++z;
      }
    };

    CoefficientBlock scratch;
    long mcu_index = 0;
    auto before_mcu = [&] {
      if (restart_interval_ == 0 || mcu_index == 0 || mcu_index % restart_interval_ != 0) return;
      bits.reset();
      const std::size_t mat = in_.pos();
      if (in_.u8() != 0xFF) throw CorruptStream(mat, "expected restart marker");
      std::uint8_t m = in_.u8();
      while (m == 0xFF) m = in_.u8();
      const auto expect = static_cast<std::uint8_t>(kRST0 + ((mcu_index / restart_interval_ - 1) & 7));
      if (m != expect) throw CorruptStream(mat, "expected " + marker_name(expect) + ", found " + marker_name(m));
      std::fill(pred.begin(), pred.end(), 0);
    };

    if (comps.size() == 1) {
      auto& comp = img_.components[comps[0].index];
      for (int by = 0; by < comp.blocks_high; ++by)
        for (int bx = 0; bx < comp.blocks_wide; ++bx, ++mcu_index) {
          before_mcu();
          decode_block(0, comp.block(bx, by));
        }
    } else {
      const int mcus_x = (img_.width + 8 * max_h_ - 1) / (8 * max_h_);
      const int mcus_y = (img_.height + 8 * max_v_ - 1) / (8 * max_v_);
      for (int my = 0; my < mcus_y; ++my)
        for (int mx = 0; mx < mcus_x; ++mx, ++mcu_index) {
          before_mcu();
          for (std::size_t k = 0; k < comps.size(); ++k) {
            auto& comp = img_.components[comps[k].index];
            for (int j = 0; j < comp.v_samp; ++j)
              for (int i = 0; i < comp.h_samp; ++i) {
                const int bx = mx * comp.h_samp + i;
                const int by = my * comp.v_samp + j;
                // MCU padding blocks are decoded and dropped
                if (bx < comp.blocks_wide && by < comp.blocks_high)
                  decode_block(k, comp.block(bx, by));
                else
                  decode_block(k, scratch);
              }
          }
        }
    }
  }

  ByteReader in_;
  CoefficientImage img_;
  std::vector<FrameComponent> frame_;
  bool frame_seen_ = false;
  int max_h_ = 1;
  int max_v_ = 1;
  unsigned restart_interval_ = 0;
  std::array<std::optional<QuantMatrix>, 4> qtables_;
  std::array<HuffmanDecoder, 4> dc_tables_;
  std::array<HuffmanDecoder, 4> ac_tables_;
};

// ---------------------------------------------------------------- encoding

class ByteWriter {
 public:
  void u8(std::uint8_t b) { out_.push_back(b); }
  void u16(std::uint16_t v) {
    u8(static_cast<std::uint8_t>(v >> 8));
    u8(static_cast<std::uint8_t>(v & 0xFF));
  }
  void marker(std::uint8_t m) {
    u8(0xFF);
    u8(m);
  }
  std::vector<std::uint8_t>& bytes() { return out_; }

 private:
  std::vector<std::uint8_t> out_;
};

class BitWriter {
 public:
  explicit BitWriter(ByteWriter& out) : out_(out) {}

  void put(std::uint32_t value, int n) {
    for (int i = n - 1; i >= 0; --i) {
      acc_ = static_cast<std::uint8_t>(acc_ << 1 | ((value >> i) & 1));
      if (++nbits_ == 8) flush_byte();
    }
  }
  void flush() {
    while (nbits_ != 0) put(1, 1);
  }

 private:
  void flush_byte() {
    out_.u8(acc_);
    if (acc_ == 0xFF) out_.u8(0x00);
    acc_ = 0;
    nbits_ = 0;
  }

  ByteWriter& out_;
  std::uint8_t acc_ = 0;
  int nbits_ = 0;
};

int magnitude_category(std::int32_t v) {
  int s = 0;
  for (std::uint32_t a = static_cast<std::uint32_t>(v < 0 ? -v : v); a; a >>= 1) ++s;
  return s;
}

void put_symbol(BitWriter& bw, const HuffmanEncoder& h, int sym) {
  if (h.length[sym] == 0) throw InvalidArgument("symbol missing from Huffman table");
  bw.put(h.code[sym], h.length[sym]);
}

void put_magnitude(BitWriter& bw, std::int32_t v, int s) {
  if (s == 0) return;
  const std::uint32_t bits = v >= 0 ? static_cast<std::uint32_t>(v) : static_cast<std::uint32_t>(v + (1 << s) - 1);
  bw.put(bits, s);
}

void write_dht_table(ByteWriter& w, int tc, int th, const HuffmanSpec& spec) {
  w.u8(static_cast<std::uint8_t>(tc << 4 | th));
  for (auto c : spec.counts) w.u8(c);
  for (auto s : spec.symbols) w.u8(s);
}

void check_ranges(const CoefficientImage& img) {
  for (const auto& comp : img.components)
    for (const auto& b : comp.blocks) {
      if (b.coeffs[0] < -2047 || b.coeffs[0] > 2047) throw InvalidArgument("DC coefficient outside baseline range");
      for (int i = 1; i < kBlockArea; ++i)
        if (b.coeffs[i] < -1023 || b.coeffs[i] > 1023) throw InvalidArgument("AC coefficient outside baseline range");
    }
}

}  // namespace

CoefficientImage decode_file(std::span<const std::uint8_t> bytes) { return Decoder(bytes).run(); }

std::vector<std::uint8_t> encode_file(const CoefficientImage& img) {
  validate(img);
  check_ranges(img);
  const bool color = img.components.size() == 3;

  // Distinct quantizers in first-use order.
  std::vector<const QuantMatrix*> tables;
  std::vector<int> comp_table;
  for (const auto& c : img.components) {
    auto it = std::find_if(tables.begin(), tables.end(), [&](const QuantMatrix* q) { return *q == c.quant; });
    if (it == tables.end()) {
      tables.push_back(&c.quant);
      comp_table.push_back(static_cast<int>(tables.size()) - 1);
    } else {
      comp_table.push_back(static_cast<int>(it - tables.begin()));
    }
  }

  ByteWriter w;
  w.marker(kSOI);

  w.marker(kAPP0);
  w.u16(16);
  for (char ch : {'J', 'F', 'I', 'F', '\0'}) w.u8(static_cast<std::uint8_t>(ch));
  w.u8(1);
  w.u8(1);
  w.u8(0);  // aspect ratio only
  w.u16(1);
  w.u16(1);
  w.u8(0);
  w.u8(0);

  w.marker(kDQT);
  w.u16(static_cast<std::uint16_t>(2 + tables.size() * 65));
  for (std::size_t t = 0; t < tables.size(); ++t) {
    w.u8(static_cast<std::uint8_t>(t));
    for (int k = 0; k < kBlockArea; ++k) w.u8(static_cast<std::uint8_t>((*tables[t])[kZigzagToNatural[k]]));
  }

  w.marker(kSOF0);
  w.u16(static_cast<std::uint16_t>(8 + 3 * img.components.size()));
  w.u8(8);
  w.u16(static_cast<std::uint16_t>(img.height));
  w.u16(static_cast<std::uint16_t>(img.width));
  w.u8(static_cast<std::uint8_t>(img.components.size()));
  for (std::size_t i = 0; i < img.components.size(); ++i) {
    const auto& c = img.components[i];
    w.u8(c.id);
    w.u8(static_cast<std::uint8_t>(c.h_samp << 4 | c.v_samp));
    w.u8(static_cast<std::uint8_t>(comp_table[i]));
  }

  const std::array<const HuffmanSpec*, 4> specs = {&detail::std_dc_luma(), &detail::std_ac_luma(),
                                                   &detail::std_dc_chroma(), &detail::std_ac_chroma()};
  w.marker(kDHT);
  std::size_t dht_len = 2;
  const std::size_t ntables = color ? 4 : 2;
  for (std::size_t t = 0; t < ntables; ++t) dht_len += 17 + specs[t]->symbols.size();
  w.u16(static_cast<std::uint16_t>(dht_len));
  write_dht_table(w, 0, 0, *specs[0]);
  write_dht_table(w, 1, 0, *specs[1]);
  if (color) {
    write_dht_table(w, 0, 1, *specs[2]);
    write_dht_table(w, 1, 1, *specs[3]);
  }

  w.marker(kSOS);
  w.u16(static_cast<std::uint16_t>(6 + 2 * img.components.size()));
  w.u8(static_cast<std::uint8_t>(img.components.size()));
  for (std::size_t i = 0; i < img.components.size(); ++i) {
    w.u8(img.components[i].id);
    w.u8(i == 0 ? 0x00 : 0x11);
  }
  w.u8(0);
  w.u8(63);
  w.u8(0);

  const HuffmanEncoder dc_luma(*specs[0]), ac_luma(*specs[1]), dc_chroma(*specs[2]), ac_chroma(*specs[3]);
  BitWriter bw(w);
  std::vector<std::int32_t> pred(img.components.size(), 0);

  auto encode_block = [&](std::size_t k, const CoefficientBlock& b) {
    const auto& dc = k == 0 ? dc_luma : dc_chroma;
    const auto& ac = k == 0 ? ac_luma : ac_chroma;
    const std::int32_t diff = b.coeffs[0] - pred[k];
    pred[k] = b.coeffs[0];
    const int t = magnitude_category(diff);
    if (t > 11) throw InvalidArgument("DC difference outside baseline range");
    put_symbol(bw, dc, t);
    put_magnitude(bw, diff, t);
    int run = 0;
    for (int z = 1; z < kBlockArea; ++z) {
      const std::int32_t v = b.coeffs[kZigzagToNatural[z]];
      if (v == 0) {
        ++run;
        continue;
      }
      for (; run > 15; run -= 16) put_symbol(bw, ac, 0xF0);
      const int s = magnitude_category(v);
      put_symbol(bw, ac, run << 4 | s);
      put_magnitude(bw, v, s);
      run = 0;
    }
    if (run > 0) put_symbol(bw, ac, 0x00);
  };

  if (!color) {
    const auto& comp = img.components[0];
    for (const auto& b : comp.blocks) encode_block(0, b);
  } else {
    int max_h = 1, max_v = 1;
    for (const auto& c : img.components) {
      max_h = std::max(max_h, c.h_samp);
      max_v = std::max(max_v, c.v_samp);
    }
    const int mcus_x = (img.width + 8 * max_h - 1) / (8 * max_h);
    const int mcus_y = (img.height + 8 * max_v - 1) / (8 * max_v);
    CoefficientBlock dummy;
    for (int my = 0; my < mcus_y; ++my)
      for (int mx = 0; mx < mcus_x; ++mx)
        for (std::size_t k = 0; k < img.components.size(); ++k) {
          const auto& comp = img.components[k];
          for (int j = 0; j < comp.v_samp; ++j)
            for (int i = 0; i < comp.h_samp; ++i) {
              const int bx = mx * comp.h_samp + i;
              const int by = my * comp.v_samp + j;
              if (bx < comp.blocks_wide && by < comp.blocks_high) {
                encode_block(k, comp.block(bx, by));
              } else {
                // padding block: flat, DC copied from the nearest real block
                dummy.coeffs.fill(0);
                dummy.coeffs[0] =
                    comp.block(std::min(bx, comp.blocks_wide - 1), std::min(by, comp.blocks_high - 1)).dc();
                encode_block(k, dummy);
              }
            }
        }
  }
  bw.flush();
  w.marker(kEOI);
  return std::move(w.bytes());
}

}  // namespace dcsign::jpeg
