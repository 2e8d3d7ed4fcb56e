#include "qgprng/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include "qgprng/battery.hpp"
#include "qgprng/report.hpp"

namespace qgprng::cli {

namespace {

constexpr std::size_t kDefaultSampleBytes = 10u << 20;  // 10 MiB

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "' for reading");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw DataError("error reading '" + path + "'");
  return data;
}

LatinSquare load_square(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_text(text);
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  } catch (const LatinSquareError& e) {
    throw DataError(path + ": not a Latin square: " + e.what());
  }
}

LatinSquare square_for(const QuasigroupSpec& spec) {
  if (!spec.square_path.empty()) return load_square(spec.square_path);
  return random_latin_square(spec.order, spec.seed);
}

// Output sink that is either a file or the caller's stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw DataError("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }

  std::ostream& stream() { return *stream_; }

  void finish(const std::string& path) {
    stream_->flush();
    if (!*stream_) throw DataError(path.empty() ? "error writing output" : "error writing '" + path + "'");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

enum class Format { Bytes, Symbols, Hex };

// Streams `length` outputs, block by block, without materializing them.
template <class Engine>
void stream_outputs(Engine& engine, std::size_t length, Format format, std::ostream& os) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string buffer;
  std::size_t emitted = 0;
  while (emitted < length) {
    buffer.clear();
    engine.next_block_streaming([&](std::uint32_t v) {
      if (emitted >= length) return;
      switch (format) {
        case Format::Bytes:
          buffer.push_back(static_cast<char>(v));
          break;
        case Format::Hex:
          buffer.push_back(kHex[(v >> 4) & 0xF]);
          buffer.push_back(kHex[v & 0xF]);
          break;
        case Format::Symbols:
          if (emitted != 0) buffer.push_back(' ');
          buffer += std::to_string(v);
          break;
      }
      ++emitted;
    });
    os.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  }
  if (format != Format::Bytes && length != 0) os.put('\n');
}

struct GenOptions {
  std::string square_path;
  std::size_t order = 0;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> shift_const;
  std::vector<std::size_t> shift_var;
  std::size_t length = 0;
  std::string format = "bytes";
  std::string out_path;
  bool to_stdout = false;
};

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  if (o.shift_const.has_value() == !o.shift_var.empty()) {
    err << "gen: exactly one of --shift-const or --shift-var is required\n";
    return kUsageError;
  }
  if (o.square_path.empty() == (o.order == 0)) {
    err << "gen: exactly one of --square or --order is required\n";
    return kUsageError;
  }
  const Format format = o.format == "symbols" ? Format::Symbols : o.format == "hex" ? Format::Hex : Format::Bytes;
  if (format == Format::Bytes && o.out_path.empty() && !o.to_stdout) {
    err << "gen: raw bytes need --out PATH or --stdout\n";
    return kUsageError;
  }

  GeneratorConfig config{o.square_path.empty() ? random_latin_square(o.order, o.seed) : load_square(o.square_path)};
  if (o.shift_const) {
    config.shift = ConstantShift{*o.shift_const};
  } else {
    config.shift = VariableShift{o.shift_var[0], o.shift_var[1]};
  }
  config.output = format == Format::Symbols ? OutputMap::Symbols1Based : OutputMap::BytesMinusOne;
  try {
    validate_config(config);
  } catch (const ConfigError& e) {
    throw DataError(e.what());
  }

  Output sink(o.out_path, out);
  if (config.square.order() <= 256) {
    QuasigroupEngine engine(config);
    stream_outputs(engine, o.length, format, sink.stream());
  } else {
    WideQuasigroupEngine engine(config);
    stream_outputs(engine, o.length, format, sink.stream());
  }
  sink.finish(o.out_path);
  return kSuccess;
}

struct BatteryFlags {
  std::size_t rank_matrices = kDefaultRankMatrices;
  std::size_t perm_tuples = 0;  // 0: automatic
  bool tsv = false;
};

BatteryOptions battery_options(const BatteryFlags& f) {
  BatteryOptions options;
  options.rank_matrices = f.rank_matrices;
  if (f.perm_tuples != 0) options.permutation_tuples = f.perm_tuples;
  return options;
}

void render(std::span<const SourceReport> reports, const BatteryFlags& f, std::ostream& out) {
  if (f.tsv) {
    write_tsv(out, reports);
  } else {
    write_table(out, reports);
  }
}

int cmd_test(const std::string& input_path, const std::string& gen_spec, std::size_t size, const BatteryFlags& f,
             std::ostream& out, std::ostream& err) {
  if (input_path.empty() == gen_spec.empty()) {
    err << "test: exactly one of --input or --gen is required\n";
    return kUsageError;
  }
  SourceReport report;
  std::vector<std::uint8_t> bytes;
  if (!input_path.empty()) {
    const std::string data = read_file(input_path);
    bytes.assign(data.begin(), data.end());
    report.source = input_path;
  } else {
    const auto spec = parse_generator_spec(gen_spec);
    bytes = produce(spec, size);
    report.source = spec.label;
  }
  report.outcomes = run_battery(bytes, battery_options(f));
  render(std::span<const SourceReport>(&report, 1), f, out);
  switch (verdict(report.outcomes)) {
    case Verdict::Pass:
      return kSuccess;
    case Verdict::Fail:
      return kBatteryFailure;
    case Verdict::Insufficient:
      break;
  }
  return kInsufficientInput;
}

int cmd_compare(const std::string& a, const std::string& b, std::size_t size, const BatteryFlags& f,
                std::ostream& out) {
  const auto spec_a = parse_generator_spec(a);
  const auto spec_b = parse_generator_spec(b);
  const auto options = battery_options(f);
  const auto run_one = [&](const GeneratorSpec& spec) {
    const auto bytes = produce(spec, size);
    return SourceReport{spec.label, run_battery(bytes, options)};
  };
  auto future_a = std::async(std::launch::async, run_one, std::cref(spec_a));
  SourceReport report_b = run_one(spec_b);
  const std::vector<SourceReport> reports = {future_a.get(), std::move(report_b)};
  render(reports, f, out);
  return kSuccess;
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view params = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  GeneratorSpec spec;
  spec.label = std::string(text);

  if (name == "kiss") {
    std::array<std::uint32_t, 4> s = {12345, 65435, 34221, 12345};
    if (!params.empty()) {
      const auto parts = split(params, ',');
      if (parts.size() != 4) throw UsageError("kiss needs four seeds: kiss:X,Y,Z,W");
      for (std::size_t i = 0; i < 4; ++i) s[i] = parse_number<std::uint32_t>(parts[i], "KISS seed");
    }
    try {
      spec.source = KissSpec{KissState::seeded(s[0], s[1], s[2], s[3])};
    } catch (const KissSeedError& e) {
      throw UsageError(e.what());
    }
    return spec;
  }

  if (name == "qg") {
    QuasigroupSpec q;
    bool have_shift = false;
    bool have_generated = false;
    if (!params.empty()) {
      for (const auto field : split(params, ',')) {
        const std::size_t eq = field.find('=');
        if (eq == std::string_view::npos) throw UsageError("qg field '" + std::string(field) + "' needs key=value");
        const std::string_view key = field.substr(0, eq);
        const std::string_view value = field.substr(eq + 1);
        if (key == "order") {
          q.order = parse_number<std::size_t>(value, "order");
          have_generated = true;
        } else if (key == "seed") {
          q.seed = parse_number<std::uint64_t>(value, "seed");
          have_generated = true;
        } else if (key == "square") {
          q.square_path = std::string(value);
        } else if (key == "const" || key == "var") {
          if (have_shift) throw UsageError("qg takes only one of const= or var=");
          have_shift = true;
          if (key == "const") {
            q.shift = ConstantShift{parse_number<std::uint64_t>(value, "shift constant")};
          } else {
            const auto xy = split(value, ':');
            if (xy.size() != 2) throw UsageError("var= takes X:Y");
            q.shift = VariableShift{parse_number<std::size_t>(xy[0], "shift row"),
                                    parse_number<std::size_t>(xy[1], "shift column")};
          }
        } else {
          throw UsageError("unknown qg field '" + std::string(key) + "'");
        }
      }
    }
    if (have_generated && !q.square_path.empty()) throw UsageError("qg: square= excludes order= and seed=");
    if (q.square_path.empty() && (q.order < 2 || q.order > 256)) {
      throw UsageError("qg: order must be in 2..256 for byte output");
    }
    spec.source = std::move(q);
    return spec;
  }

  throw UsageError("unknown generator '" + std::string(name) + "' (expected kiss or qg)");
}

std::vector<std::uint8_t> produce(const GeneratorSpec& spec, std::size_t length) {
  if (const auto* k = std::get_if<KissSpec>(&spec.source)) {
    KissState state = k->seeds;
    return kiss_bytes(state, length);
  }
  const auto& q = std::get<QuasigroupSpec>(spec.source);
  GeneratorConfig config{square_for(q), q.shift, OutputMap::BytesMinusOne};
  try {
    return generate(config, length);
  } catch (const ConfigError& e) {
    throw DataError(spec.label + ": " + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasigroup pseudorandom generator, KISS baseline, and a Diehard-style test battery"};
  app.name("qgprng");
  app.require_subcommand(1);

  // make-square
  auto* make = app.add_subcommand("make-square", "Write a seeded random Latin square in text form");
  std::size_t make_order = 0;
  std::uint64_t make_seed = 1;
  std::string make_out;
  make->add_option("--order", make_order, "Square order")->required()->check(CLI::Range(std::size_t{2}, kMaxOrder));
  make->add_option("--seed", make_seed, "64-bit seed")->capture_default_str();
  make->add_option("--out", make_out, "Output path (default: stdout)");

  // validate-square
  auto* check = app.add_subcommand("validate-square", "Check that a file holds a Latin square");
  std::string check_path;
  check->add_option("path", check_path, "Square file")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate output from a quasigroup square");
  GenOptions g;
  auto* gen_square = gen->add_option("--square", g.square_path, "Seed square file");
  auto* gen_order = gen->add_option("--order", g.order, "Use a random square of this order instead of --square")
                        ->check(CLI::Range(std::size_t{2}, kMaxOrder));
  gen->add_option("--seed", g.seed, "Seed for the random square (with --order)")->capture_default_str();
  gen_square->excludes(gen_order);
  auto* opt_const = gen->add_option("--shift-const", g.shift_const, "Constant rotation K");
  auto* opt_var = gen->add_option("--shift-var", g.shift_var, "Variable rotation read at row X, column Y")
                      ->expected(2)
                      ->type_name("X Y");
  opt_const->excludes(opt_var);
  gen->add_option("--length", g.length, "Number of outputs")->required();
  gen->add_option("--format", g.format, "bytes | symbols | hex")
      ->check(CLI::IsMember({"bytes", "symbols", "hex"}))
      ->capture_default_str();
  auto* gen_out = gen->add_option("--out", g.out_path, "Output path");
  auto* gen_stdout = gen->add_flag("--stdout", g.to_stdout, "Write to standard output");
  gen_out->excludes(gen_stdout);

  // test
  auto* test = app.add_subcommand("test", "Run the battery on a file or a generator");
  std::string test_input;
  std::string test_gen;
  std::size_t test_size = kDefaultSampleBytes;
  BatteryFlags test_flags;
  auto* test_in_opt = test->add_option("--input", test_input, "Byte file to test");
  auto* test_gen_opt = test->add_option("--gen", test_gen, "Generator spec, e.g. qg:order=256,seed=1,const=7 or kiss");
  test_in_opt->excludes(test_gen_opt);
  test->add_option("--size", test_size, "Bytes to generate with --gen")->capture_default_str();

  // compare
  auto* compare = app.add_subcommand("compare", "Run the battery on two generators side by side");
  std::string cmp_a = "kiss";
  std::string cmp_b = "qg";
  std::size_t cmp_size = kDefaultSampleBytes;
  BatteryFlags cmp_flags;
  compare->add_option("--a", cmp_a, "First generator spec")->capture_default_str();
  compare->add_option("--b", cmp_b, "Second generator spec")->capture_default_str();
  compare->add_option("--size", cmp_size, "Bytes per generator")->capture_default_str();

  for (auto [sub, flags] : {std::pair{test, &test_flags}, std::pair{compare, &cmp_flags}}) {
    sub->add_option("--rank-matrices", flags->rank_matrices, "Matrices per binary rank test")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--perm-tuples", flags->perm_tuples,
                    "5-tuples for the permutation test (default: fit input, at most 1000000)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--tsv", flags->tsv, "Machine-readable output: test, source, statistic, df, p");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*make) {
      const auto square = random_latin_square(make_order, make_seed);
      Output sink(make_out, out);
      sink.stream() << to_text(square);
      sink.finish(make_out);
      return kSuccess;
    }
    if (*check) {
      const auto square = load_square(check_path);
      out << check_path << ": valid Latin square of order " << square.order() << '\n';
      return kSuccess;
    }
    if (*gen) return cmd_gen(g, out, err);
    if (*test) return cmd_test(test_input, test_gen, test_size, test_flags, out, err);
    if (*compare) return cmd_compare(cmp_a, cmp_b, cmp_size, cmp_flags, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace qgprng::cli
