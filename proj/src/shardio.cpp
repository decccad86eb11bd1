#include "arraycode/shardio.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "arraycode/costmodel.hpp"
#include "arraycode/decoder.hpp"
#include "arraycode/errors.hpp"
#include "arraycode/vandermonde.hpp"

namespace arraycode {

namespace fs = std::filesystem;

namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  out.write(buf, sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T))) throw FormatError("truncated shard header");
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(buf[i]) << (8 * i);
  return value;
}

bool file_bit(const std::vector<std::uint8_t>& bytes, std::uint64_t n) {
  const std::uint64_t byte = n / 8;
  return byte < bytes.size() && ((bytes[byte] >> (n % 8)) & 1U);
}

std::uint64_t bits_per_stripe(const CodeParams& params) {
  return static_cast<std::uint64_t>(params.p - 1) * params.k;
}

std::uint64_t stripes_for(const CodeParams& params, std::uint64_t byte_len) {
  const std::uint64_t b = bits_per_stripe(params);
  return (byte_len * 8 + b - 1) / b;
}

void load_stripe_info(const std::vector<std::uint8_t>& bytes, const CodeParams& params,
                      std::uint64_t stripe, std::vector<RingPoly>& info) {
  const std::uint64_t base = stripe * bits_per_stripe(params);
  for (auto& c : info) c = RingPoly(params.p);
  for (int row = 0; row < params.p - 1; ++row) {
    for (int col = 0; col < params.k; ++col) {
      const std::uint64_t n = base + static_cast<std::uint64_t>(row) * params.k + col;
      if (file_bit(bytes, n)) info[col].set_coeff(row, true);
    }
  }
}

void store_stripe_info(std::vector<std::uint8_t>& bytes, const CodeParams& params,
                       std::uint64_t stripe, const std::vector<RingPoly>& cols) {
  const std::uint64_t base = stripe * bits_per_stripe(params);
  const std::uint64_t limit = static_cast<std::uint64_t>(bytes.size()) * 8;
  for (int row = 0; row < params.p - 1; ++row) {
    for (int col = 0; col < params.k; ++col) {
      const std::uint64_t n = base + static_cast<std::uint64_t>(row) * params.k + col;
      if (n >= limit) return;
      if (cols[col].coeff(row)) bytes[n / 8] |= static_cast<std::uint8_t>(1U << (n % 8));
    }
  }
}

void print_error(std::ostream& err, int code, const char* kind, const std::string& message) {
  std::string flat = message;
  std::replace(flat.begin(), flat.end(), '\n', ' ');
  err << "error: code=" << code << " kind=" << kind << " message=" << flat << '\n';
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParameterError& e) {
    print_error(err, kExitParameter, "parameter", e.what());
    return kExitParameter;
  } catch (const InputError& e) {
    print_error(err, kExitParameter, "input", e.what());
    return kExitParameter;
  } catch (const UnrecoverableError& e) {
    print_error(err, kExitUnrecoverable, "unrecoverable", e.what());
    return kExitUnrecoverable;
  } catch (const FormatError& e) {
    print_error(err, kExitFormat, "format", e.what());
    return kExitFormat;
  } catch (const fs::filesystem_error& e) {
    print_error(err, kExitFormat, "io", e.what());
    return kExitFormat;
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::size_t column_bytes(int p) { return static_cast<std::size_t>(p - 1 + 7) / 8; }

std::size_t header_size(const CodeParams& params) {
  return 6 + 1 + 1 + 2 * 3 + 2 + 2 * params.g.size() + 4 + 8 * 3;
}

void write_header(std::ostream& out, const ShardHeader& h) {
  out.write(kShardMagic, sizeof kShardMagic);
  put_le<std::uint8_t>(out, kShardVersion);
  put_le<std::uint8_t>(out, h.params.family == Family::Evenodd ? 0 : 1);
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(h.params.p));
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(h.params.k));
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(h.params.r));
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(h.params.g.size()));
  for (int v : h.params.g) put_le<std::uint16_t>(out, static_cast<std::uint16_t>(v));
  put_le<std::uint32_t>(out, h.column_index);
  put_le<std::uint64_t>(out, h.stripe_count);
  put_le<std::uint64_t>(out, h.payload_byte_len);
  put_le<std::uint64_t>(out, h.original_file_len);
}

ShardHeader read_header(std::istream& in) {
  char magic[6];
  if (!in.read(magic, sizeof magic)) throw FormatError("truncated shard header");
  if (std::memcmp(magic, kShardMagic, sizeof magic) != 0) throw FormatError("bad shard magic");
  if (get_le<std::uint8_t>(in) != kShardVersion) throw FormatError("unsupported shard version");
  const std::uint8_t family = get_le<std::uint8_t>(in);
  if (family > 1) throw FormatError("unknown family byte " + std::to_string(family));
  ShardHeader h;
  h.params.family = family == 0 ? Family::Evenodd : Family::Rdp;
  h.params.p = get_le<std::uint16_t>(in);
  h.params.k = get_le<std::uint16_t>(in);
  h.params.r = get_le<std::uint16_t>(in);
  const std::uint16_t g_len = get_le<std::uint16_t>(in);
  for (int i = 0; i < g_len; ++i) h.params.g.push_back(get_le<std::uint16_t>(in));
  h.column_index = get_le<std::uint32_t>(in);
  h.stripe_count = get_le<std::uint64_t>(in);
  h.payload_byte_len = get_le<std::uint64_t>(in);
  h.original_file_len = get_le<std::uint64_t>(in);
  try {
    validate(h.params);
  } catch (const ParameterError& e) {
    throw FormatError(std::string("shard header carries invalid parameters: ") + e.what());
  }
  if (h.column_index >= static_cast<std::uint32_t>(h.params.columns())) {
    throw FormatError("column index " + std::to_string(h.column_index) + " out of range");
  }
  if (h.payload_byte_len != h.stripe_count * column_bytes(h.params.p)) {
    throw FormatError("payload length does not match stripe count");
  }
  return h;
}

void pack_column(const RingPoly& column, std::uint8_t* out) {
  const int p = column.p();
  std::memset(out, 0, column_bytes(p));
  for (int i = 0; i < p - 1; ++i) {
    if (column.coeff(i)) out[i / 8] |= static_cast<std::uint8_t>(1U << (i % 8));
  }
}

RingPoly unpack_column(const std::uint8_t* in, int p) {
  RingPoly column(p);
  const std::size_t nbytes = column_bytes(p);
  for (std::size_t b = 0; b < nbytes; ++b) {
    for (int bit = 0; bit < 8; ++bit) {
      if (!((in[b] >> bit) & 1U)) continue;
      const int i = static_cast<int>(b * 8) + bit;
      if (i >= p - 1) throw FormatError("nonzero padding bit in shard payload");
      column.set_coeff(i, true);
    }
  }
  return column;
}

SplitFile split_file(const std::vector<std::uint8_t>& bytes, const CodeParams& params) {
  SplitFile out;
  out.original_len = bytes.size();
  const std::uint64_t count = stripes_for(params, bytes.size());
  out.stripes.resize(count, std::vector<RingPoly>(params.k, RingPoly(params.p)));
  for (std::uint64_t s = 0; s < count; ++s) load_stripe_info(bytes, params, s, out.stripes[s]);
  return out;
}

std::vector<std::uint8_t> join_stripes(const std::vector<std::vector<RingPoly>>& stripes,
                                       const CodeParams& params, std::uint64_t original_len) {
  std::vector<std::uint8_t> bytes(original_len, 0);
  for (std::uint64_t s = 0; s < stripes.size(); ++s) store_stripe_info(bytes, params, s, stripes[s]);
  return bytes;
}

fs::path shard_path(const fs::path& dir, int column) {
  char name[32];
  std::snprintf(name, sizeof name, "col_%03d.shard", column);
  return dir / name;
}

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("short write to " + path.string());
}

void write_shard(const fs::path& path, const ShardHeader& h, const std::vector<std::uint8_t>& payload) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  write_header(out, h);
  out.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
  if (!out) throw FormatError("short write to " + path.string());
}

ShardSet read_shard_set(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw FormatError("shard directory " + dir.string() + " not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".shard") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw FormatError("no shard files in " + dir.string());
  ShardSet set;
  std::optional<ShardHeader> first;
  std::vector<bool> present;
  for (const fs::path& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    const ShardHeader h = read_header(in);
    if (!first) {
      first = h;
      set.params = h.params;
      set.stripe_count = h.stripe_count;
      set.payloads.assign(h.params.columns(), {});
      present.assign(h.params.columns(), false);
    } else if (!(h.params == first->params) || h.stripe_count != first->stripe_count) {
      throw FormatError("shard " + path.filename().string() + " disagrees with the rest of the set");
    }
    const int c = static_cast<int>(h.column_index);
    if (present[c]) throw FormatError("duplicate shard for column " + std::to_string(c));
    present[c] = true;
    if (c < h.params.k) {
      if (set.original_file_len && *set.original_file_len != h.original_file_len) {
        throw FormatError("information shards disagree on the file length");
      }
      set.original_file_len = h.original_file_len;
    } else if (h.original_file_len != 0) {
      throw FormatError("parity shard carries a nonzero file length");
    }
    std::vector<std::uint8_t> payload(h.payload_byte_len);
    if (!in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(payload.size()))) {
      throw FormatError("truncated payload in " + path.filename().string());
    }
    if (in.peek() != std::char_traits<char>::eof()) {
      throw FormatError("trailing bytes in " + path.filename().string());
    }
    set.payloads[c] = std::move(payload);
  }
  if (set.original_file_len && stripes_for(set.params, *set.original_file_len) != set.stripe_count) {
    throw FormatError("stripe count does not match the recorded file length");
  }
  for (int c = 0; c < set.params.columns(); ++c) {
    if (!present[c]) set.missing.push_back(c);
  }
  return set;
}

std::vector<std::vector<std::uint8_t>> encode_payloads(const CodeParams& params,
                                                       const std::vector<std::uint8_t>& bytes,
                                                       std::uint64_t& stripe_count) {
  stripe_count = stripes_for(params, bytes.size());
  const std::size_t cb = column_bytes(params.p);
  std::vector<std::vector<std::uint8_t>> payloads(params.columns(),
                                                  std::vector<std::uint8_t>(stripe_count * cb));
  std::vector<RingPoly> info(params.k, RingPoly(params.p));
  for (std::uint64_t s = 0; s < stripe_count; ++s) {
    load_stripe_info(bytes, params, s, info);
    XorTally t;
    const CodewordArray code = encode(params, info, t);
    for (int c = 0; c < params.columns(); ++c) pack_column(code.cols[c], payloads[c].data() + s * cb);
  }
  return payloads;
}

DecodeResult decode_shard_set(const ShardSet& set) {
  const CodeParams& params = set.params;
  const ErasureSpec spec = ErasureSpec::from_columns(params, set.missing);
  if (!set.original_file_len) {
    throw FormatError("every information shard is missing; the original file length is unknown");
  }
  const StripeDecoder decoder(params, spec);
  DecodeResult result;
  result.used_fallback = decoder.uses_fallback();
  result.file.assign(*set.original_file_len, 0);
  result.payloads = set.payloads;
  const std::size_t cb = column_bytes(params.p);
  for (int c : set.missing) result.payloads[c].assign(set.stripe_count * cb, 0);
  CodewordArray work{params, std::vector<RingPoly>(params.columns(), RingPoly(params.p))};
  std::vector<bool> missing(params.columns(), false);
  for (int c : set.missing) missing[c] = true;
  XorTally t;
  for (std::uint64_t s = 0; s < set.stripe_count; ++s) {
    for (int c = 0; c < params.columns(); ++c) {
      if (!missing[c]) work.cols[c] = unpack_column(set.payloads[c].data() + s * cb, params.p);
    }
    const CodewordArray full = spec.gamma() + spec.delta() == 0 ? work : decoder.decode(work, t);
    for (int c : set.missing) pack_column(full.cols[c], result.payloads[c].data() + s * cb);
    store_stripe_info(result.file, params, s, full.cols);
  }
  result.xor_count = t.count;
  return result;
}

int cli_encode(const EncodeOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CodeParams params = make_params(opt.family, opt.p, opt.k, opt.r, opt.g, opt.mds_mode);
    if (!fs::is_regular_file(opt.input)) throw ParameterError("input file " + opt.input.string() + " not found");
    const std::vector<std::uint8_t> bytes = read_file(opt.input);
    fs::create_directories(opt.out_dir);
    std::uint64_t stripes = 0;
    const auto payloads = encode_payloads(params, bytes, stripes);
    for (int c = 0; c < params.columns(); ++c) {
      ShardHeader h{params, static_cast<std::uint32_t>(c), stripes, payloads[c].size(),
                    c < params.k ? bytes.size() : 0};
      write_shard(shard_path(opt.out_dir, c), h, payloads[c]);
    }
    out << "encoded " << bytes.size() << " bytes into " << params.columns() << " shards, " << stripes
        << " stripes\n";
    return static_cast<int>(kExitOk);
  });
}

int cli_erase(const fs::path& dir, const std::vector<int>& cols, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    for (int c : cols) {
      const fs::path path = shard_path(dir, c);
      if (!fs::remove(path)) throw ParameterError("shard " + path.string() + " does not exist");
    }
    out << "erased columns " << join_ints(cols) << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cli_decode(const fs::path& dir, const fs::path& output, bool repair, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const ShardSet set = read_shard_set(dir);
    const DecodeResult result = decode_shard_set(set);
    write_file(output, result.file);
    if (repair) {
      for (int c : set.missing) {
        ShardHeader h{set.params, static_cast<std::uint32_t>(c), set.stripe_count,
                      result.payloads[c].size(), c < set.params.k ? *set.original_file_len : 0};
        write_shard(shard_path(dir, c), h, result.payloads[c]);
      }
    }
    out << "decoded " << result.file.size() << " bytes; erased columns [" << join_ints(set.missing)
        << "]; path " << (result.used_fallback ? "fallback" : "lu") << "; xors " << result.xor_count
        << (repair && !set.missing.empty() ? "; repaired" : "") << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cli_verify(const fs::path& dir, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ShardSet set = read_shard_set(dir);
    const CodeParams& params = set.params;
    for (int c : set.missing) {
      if (c < params.k) throw UnrecoverableError("verify needs every information shard; column " + std::to_string(c) + " is missing");
    }
    const std::size_t cb = column_bytes(params.p);
    std::vector<int> mismatched;
    std::vector<RingPoly> info(params.k);
    for (int c = params.k; c < params.columns(); ++c) {
      if (set.payloads[c].empty()) continue;
      for (std::uint64_t s = 0; s < set.stripe_count; ++s) {
        for (int j = 0; j < params.k; ++j) info[j] = unpack_column(set.payloads[j].data() + s * cb, params.p);
        XorTally t;
        const RingPoly expect = encode_parity_column(params, info, c - params.k, t);
        if (!(expect == unpack_column(set.payloads[c].data() + s * cb, params.p))) {
          mismatched.push_back(c);
          break;
        }
      }
    }
    if (!mismatched.empty()) {
      out << "mismatch columns " << join_ints(mismatched) << '\n';
      print_error(err, kExitMismatch, "mismatch", "parity columns " + join_ints(mismatched) + " do not match");
      return static_cast<int>(kExitMismatch);
    }
    out << "ok; missing columns [" << join_ints(set.missing) << "]\n";
    return static_cast<int>(kExitOk);
  });
}

namespace {

struct BenchRow {
  Family family;
  int p, k, r, gamma, delta, lambda;
  std::uint64_t measured_min = 0, measured_max = 0;
  double measured_mean = 0;
  std::int64_t predicted = 0, predicted_br = 0;
};

std::vector<BenchRow> measure_decode_costs(const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  std::mt19937_64 rng(opt.seed);
  for (Family family : {Family::Evenodd, Family::Rdp}) {
    const int p = 7;
    const int k = 5;
    const int r = 3;
    const CodeParams params = make_params(family, p, k, r, std::nullopt, true);
    for (int gamma = 1; gamma <= r; ++gamma) {
      for (int delta = 0; gamma + delta <= r; ++delta) {
        ErasureSpec spec;
        for (int i = 0; i < gamma; ++i) spec.info_erased.push_back(i);
        for (int i = 0; i < delta; ++i) spec.parity_erased.push_back(k + 1 + i);
        for (int lambda = 0; lambda <= delta; ++lambda) {
          const DecodePlan pl = plan(params, spec, lambda);
          if (pl.needs_fallback) continue;
          const StripeDecoder decoder(params, spec, lambda);
          BenchRow row{family, p, k, r, gamma, delta, lambda};
          row.measured_min = ~std::uint64_t{0};
          double sum = 0;
          for (int trial = 0; trial < opt.trials; ++trial) {
            XorTally enc;
            CodewordArray stripe = encode(params, random_info(params, rng), enc);
            for (int c : spec.all_columns()) stripe.cols[c] = RingPoly(p);
            XorTally t;
            decoder.decode(stripe, t);
            row.measured_min = std::min(row.measured_min, t.count);
            row.measured_max = std::max(row.measured_max, t.count);
            sum += static_cast<double>(t.count);
          }
          row.measured_mean = sum / opt.trials;
          row.predicted = predict_decode(family, p, k, gamma, delta, lambda == 0);
          row.predicted_br = predict_blaum_roth(family, p, k, gamma, delta, lambda == 0);
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

}  // namespace

int cli_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.trials < 1) throw ParameterError("trials must be positive");
    const std::vector<BenchRow> measured = measure_decode_costs(opt);
    std::vector<ComparisonRow> comparison;
    for (Family family : {Family::Evenodd, Family::Rdp}) {
      for (int r : {4, 5}) {
        const auto rows = comparison_report(family, r, opt.p_min, opt.p_max);
        comparison.insert(comparison.end(), rows.begin(), rows.end());
      }
    }
    if (opt.json) {
      nlohmann::json doc;
      doc["decode"] = nlohmann::json::array();
      for (const BenchRow& row : measured) {
        doc["decode"].push_back({
            {"family", family_name(row.family)},
            {"p", row.p},
            {"k", row.k},
            {"r", row.r},
            {"gamma", row.gamma},
            {"delta", row.delta},
            {"lambda", row.lambda},
            {"lambda_case", row.lambda == 0 ? "zero" : "positive"},
            {"measured_xors", row.measured_mean},
            {"measured_xors_min", row.measured_min},
            {"measured_xors_max", row.measured_max},
            {"predicted_xors", row.predicted},
            {"predicted_blaum_roth_xors", row.predicted_br},
            {"reduction_percent",
             100.0 * static_cast<double>(row.predicted_br - row.predicted) / row.predicted_br},
        });
      }
      doc["comparison"] = nlohmann::json::array();
      for (const ComparisonRow& row : comparison) {
        doc["comparison"].push_back({
            {"family", family_name(row.family)},
            {"r", row.r},
            {"p", row.p},
            {"k", row.k},
            {"gamma", row.r},
            {"delta", 0},
            {"lambda_case", "zero"},
            {"predicted_xors", row.lu_xors},
            {"predicted_blaum_roth_xors", row.blaum_roth_xors},
            {"lu_normalized", row.lu_normalized},
            {"blaum_roth_normalized", row.blaum_roth_normalized},
            {"reduction_percent", row.reduction_percent},
            {"realizable", row.realizable},
        });
      }
      out << doc.dump(2) << '\n';
      return static_cast<int>(kExitOk);
    }
    out << "family   p  k  r  gamma delta lambda  measured(min/mean/max)   predicted  blaum_roth\n";
    for (const BenchRow& row : measured) {
      out << std::left << std::setw(8) << family_name(row.family) << std::right << std::setw(3) << row.p
          << std::setw(3) << row.k << std::setw(3) << row.r << std::setw(7) << row.gamma << std::setw(6)
          << row.delta << std::setw(7) << row.lambda << "  " << std::setw(6) << row.measured_min << '/'
          << std::fixed << std::setprecision(1) << std::setw(7) << row.measured_mean << '/'
          << std::setw(6) << row.measured_max << std::setw(12) << row.predicted << std::setw(12)
          << row.predicted_br << '\n';
    }
    out << "\nfamily   r   p    k   lu_norm   br_norm  reduction%\n";
    for (const ComparisonRow& row : comparison) {
      out << std::left << std::setw(8) << family_name(row.family) << std::right << std::setw(2) << row.r
          << std::setw(4) << row.p << std::setw(5) << row.k << std::fixed << std::setprecision(3)
          << std::setw(10) << row.lu_normalized << std::setw(10) << row.blaum_roth_normalized
          << std::setprecision(2) << std::setw(11) << row.reduction_percent
          << (row.realizable ? "" : "  (r > k, formula only)") << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int cli_selftest(std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::mt19937_64 rng(7);
    std::map<std::string, bool> results;
    auto random_poly = [&](int p) {
      RingPoly f(p);
      for (int i = 0; i < p; ++i) f.set_coeff(i, rng() & 1U);
      return f;
    };

    bool division = true;
    for (int p : {3, 5, 7}) {
      for (int d = 1; d < p; ++d) {
        for (int trial = 0; trial < 200; ++trial) {
          RingPoly f = random_poly(p);
          if (parity_at_one(f)) f.flip(0);
          XorTally ta;
          XorTally te;
          const RingPoly ga = div_one_plus_xd_any(f, d, ta);
          const RingPoly ge = div_one_plus_xd_even(f, d, te);
          const RingPoly divisor = RingPoly::from_exponents(p, {0, d});
          division = division && mul(divisor, ga) == f && mul(divisor, ge) == f &&
                     ta.count == static_cast<std::uint64_t>(p - 3) &&
                     te.count == static_cast<std::uint64_t>((3 * p - 5) / 2);
        }
      }
    }
    results["division"] = division;

    bool solver = true;
    for (int p : {5, 7}) {
      for (int r = 1; r <= std::min(p - 1, 5); ++r) {
        std::vector<long long> a;
        for (int i = 0; i < r; ++i) a.push_back(i);
        const ExponentTuple e(p, a);
        for (int trial = 0; trial < 50; ++trial) {
          std::vector<RingPoly> w;
          for (int i = 0; i < r; ++i) {
            RingPoly c = random_poly(p);
            c.set_coeff(p - 1, false);
            w.push_back(c);
          }
          std::vector<RingPoly> v(r, RingPoly(p));
          for (int j = 0; j < r; ++j) {
            for (int i = 0; i < r; ++i) v[j] ^= shift(w[i], static_cast<long long>(j) * e[i]);
          }
          XorTally t;
          const auto u = solve_lu(e, v, t);
          std::vector<QuotientPoly> vq;
          for (const auto& c : v) vq.push_back(QuotientPoly::from_ring(c));
          const auto uc = solve_cramer(e, vq);
          for (int i = 0; i < r; ++i) solver = solver && QuotientPoly::from_ring(u[i]) == uc[i];
          solver = solver && t.count == static_cast<std::uint64_t>(predict_lu(r, p));
        }
      }
    }
    results["solver"] = solver;

    bool encoding = true;
    bool decoding = true;
    for (Family family : {Family::Evenodd, Family::Rdp}) {
      const CodeParams params = make_params(family, 5, 3, 3, std::nullopt, true);
      for (int trial = 0; trial < 20; ++trial) {
        XorTally t;
        const auto info = random_info(params, rng);
        const CodewordArray code = encode(params, info, t);
        encoding = encoding && algebraic_encode(params, info).cols == augment(code, t).cols;
        for (int mask = 1; mask < (1 << params.columns()); ++mask) {
          std::vector<int> cols;
          for (int c = 0; c < params.columns(); ++c) {
            if (mask >> c & 1) cols.push_back(c);
          }
          if (static_cast<int>(cols.size()) > params.r) continue;
          const ErasureSpec spec = ErasureSpec::from_columns(params, cols);
          CodewordArray damaged = code;
          for (int c : cols) damaged.cols[c] = RingPoly(params.p);
          decoding = decoding && decode(params, damaged, spec, t) == code;
        }
      }
    }
    results["encoding"] = encoding;
    results["decoding"] = decoding;

    bool shortening = true;
    const CodeParams ev = make_params(Family::Evenodd, 5, 4, 3, std::vector<int>{0, 1, 4, 3});
    const CodeParams rdp = make_params(Family::Rdp, 5, 3, 3, std::vector<int>{0, 1, 4, 3});
    for (int trial = 0; trial < 20; ++trial) shortening = shortening && shorten_check(ev, rdp, random_info(rdp, rng));
    results["shortening"] = shortening;

    bool all = true;
    for (const auto& [name, ok] : results) {
      out << (ok ? "PASS " : "FAIL ") << name << '\n';
      all = all && ok;
    }
    if (!all) print_error(err, kExitMismatch, "selftest", "one or more self-test suites failed");
    return static_cast<int>(all ? kExitOk : kExitMismatch);
  });
}

}  // namespace arraycode
