// Command-line front end: encode/query/decode single codewords, evaluate the
// blocklength bounds, and run the experiment harness.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sldc/bench.hpp"
#include "sldc/bounds.hpp"
#include "sldc/container.hpp"
#include "sldc/errors.hpp"
#include "sldc/speedlimit.hpp"

using json = nlohmann::json;

namespace {

// Exit codes: 1 usage (CLI11), 2 domain, 3 search cap, 4 container, 5 corrupt.
constexpr int kExitDomain = 2;
constexpr int kExitSearchCap = 3;
constexpr int kExitContainer = 4;
constexpr int kExitInconsistent = 5;

std::vector<std::uint64_t> parse_indices(std::istream& in) {
  std::vector<std::uint64_t> indices;
  std::uint64_t value;
  while (in >> value) indices.push_back(value);
  std::sort(indices.begin(), indices.end());
  return indices;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << text << "\n";
  }
}

json bounds_to_json(const sldc::BoundsReport& b) {
  json j{{"n", b.n},
         {"r", b.r},
         {"d", b.d},
         {"block_error_eps", b.block_error_eps},
         {"entropy_bits", b.entropy_bits},
         {"lower_thm1", b.lower_thm1},
         {"m_available", b.m_available},
         {"lower_lym", b.lower_lym},
         {"upper_thm2", b.upper_thm2},
         {"reference_scale", b.reference_scale}};
  if (b.m_available) j["M"] = b.m;
  return j;
}

json stats_to_json(const sldc::LengthStats& s) {
  json hist = json::object();
  for (const auto& [len, count] : s.histogram)
    hist[std::to_string(len)] = count;
  return json{{"trials", s.trials},
              {"mean", s.mean},
              {"stddev", s.stddev},
              {"ci95_halfwidth", s.ci95_halfwidth},
              {"min", s.min},
              {"max", s.max},
              {"histogram", hist}};
}

std::string stats_to_csv(const sldc::LengthStats& s) {
  std::ostringstream out;
  out << "length,count\n";
  for (const auto& [len, count] : s.histogram) out << len << "," << count << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variable-length locally decodable compression of sparse bit sequences"};
  app.require_subcommand(1);

  std::uint64_t n = 0, r = 0, d = 1, seed = 0, kmax = 0, trials = 10000;
  std::uint64_t query_index = 0;
  double eps = 0.0;
  std::string in_path, out_path, support_arg, format = "json", grid_arg;

  auto add_params = [&](CLI::App* cmd, bool with_kmax = true) {
    cmd->add_option("--n", n, "sequence length")->required();
    cmd->add_option("--r", r, "sparsity (number of ones)")->required();
    cmd->add_option("--d", d, "probe budget per query")->required();
    cmd->add_option("--seed", seed, "master seed");
    if (with_kmax) cmd->add_option("--kmax", kmax, "level search cap (0 = default)");
  };

  auto* enc = app.add_subcommand("encode", "encode a support list to a container");
  add_params(enc);
  enc->add_option("--support", support_arg, "support indices (default: stdin)");
  enc->add_option("--out", out_path, "container output path")->required();

  auto* qry = app.add_subcommand("query", "decode one bit from a container");
  qry->add_option("--in", in_path, "container path")->required();
  qry->add_option("--j", query_index, "query index (1-based)")->required();

  auto* dec = app.add_subcommand("decode", "recover the support list");
  dec->add_option("--in", in_path, "container path")->required();

  auto* bnd = app.add_subcommand("bounds", "evaluate the blocklength bounds");
  add_params(bnd, false);
  bnd->add_option("--eps", eps, "block-error rate");
  bnd->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* bench = app.add_subcommand("bench", "experiment harness");
  bench->require_subcommand(1);
  auto* mc = bench->add_subcommand("mc", "Monte Carlo expected length");
  add_params(mc);
  mc->add_option("--trials", trials);
  mc->add_option("--format", format, "json or csv");
  mc->add_option("--out", out_path);
  auto* scaling = bench->add_subcommand("scaling", "log-log growth exponent");
  scaling->add_option("--r", r)->required();
  scaling->add_option("--d", d)->required();
  scaling->add_option("--seed", seed);
  scaling->add_option("--trials", trials);
  scaling->add_option("--n-grid", grid_arg, "comma-separated n values")->required();
  scaling->add_option("--format", format, "json or csv");
  scaling->add_option("--out", out_path);
  auto* exhaustive = bench->add_subcommand("exhaustive", "exhaustive sweep");
  add_params(exhaustive);
  exhaustive->add_option("--out", out_path);

  auto* speed = app.add_subcommand("speedlimit", "membership protocol experiment");
  add_params(speed);
  speed->add_option("--trials", trials);
  speed->add_option("--set", support_arg,
                    "run a single transcript for this stored set");
  speed->add_option("--i", query_index, "query index for the single run");
  speed->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "exhaustive correctness sweep");
  add_params(verify);
  verify->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enc) {
      sldc::CodeParams params{n, r, d, seed, kmax};
      std::vector<std::uint64_t> support;
      if (support_arg.empty()) {
        support = parse_indices(std::cin);
      } else {
        std::istringstream in(support_arg);
        support = parse_indices(in);
      }
      sldc::Codebook codebook(params);
      const sldc::Codeword c = sldc::encode(codebook, {n, support});
      write_file(out_path, sldc::serialize_codeword(params, c));
      std::cout << "length " << c.length << "\n";
    } else if (*qry) {
      const auto [params, c] = sldc::parse_codeword(read_file(in_path));
      sldc::Codebook codebook(params);
      const auto [bit, trace] = sldc::decode_bit(codebook, c, query_index);
      std::cout << "bit " << bit << "\nprobes " << trace.positions.size();
      for (std::size_t i = 0; i < trace.positions.size(); ++i)
        std::cout << "\nprobe " << trace.positions[i] << " -> "
                  << trace.values[i];
      std::cout << "\n";
    } else if (*dec) {
      const auto [params, c] = sldc::parse_codeword(read_file(in_path));
      sldc::Codebook codebook(params);
      const sldc::SparseSeq x = sldc::decode_full(codebook, c);
      for (std::size_t i = 0; i < x.support.size(); ++i)
        std::cout << (i ? " " : "") << x.support[i];
      std::cout << "\n";
    } else if (*bnd) {
      emit(bounds_to_json(sldc::bounds_report(n, r, d, eps)).dump(2), out_path);
    } else if (*mc) {
      const auto stats =
          sldc::mc_expected_length({n, r, d, seed, kmax}, trials, seed);
      emit(format == "csv" ? stats_to_csv(stats) : stats_to_json(stats).dump(2),
           out_path);
    } else if (*scaling) {
      std::vector<std::uint64_t> grid;
      std::istringstream in(grid_arg);
      for (std::string tok; std::getline(in, tok, ',');)
        grid.push_back(std::stoull(tok));
      const auto result = sldc::scaling_experiment(r, d, grid, trials, seed);
      if (format == "csv") {
        std::ostringstream out;
        out << "n,mean_length\n";
        for (const auto& p : result.points)
          out << p.n << "," << p.mean_length << "\n";
        out << "# slope " << result.slope;
        emit(out.str(), out_path);
      } else {
        json points = json::array();
        for (const auto& p : result.points)
          points.push_back({{"n", p.n}, {"mean_length", p.mean_length}});
        emit(json{{"slope", result.slope}, {"points", points}}.dump(2),
             out_path);
      }
    } else if (*exhaustive || *verify) {
      const auto report = sldc::exhaustive_verify({n, r, d, seed, kmax});
      const json j{{"sequences", report.sequences},
                   {"queries", report.queries},
                   {"errors", report.errors},
                   {"max_probes", report.max_probes},
                   {"probe_budget_ok", report.probe_budget_ok},
                   {"non_adaptive_ok", report.non_adaptive_ok},
                   {"injective", report.injective},
                   {"min_level_ok", report.min_level_ok}};
      emit(j.dump(2), out_path);
      if (report.errors != 0 || !report.probe_budget_ok || !report.injective ||
          !report.non_adaptive_ok || !report.min_level_ok)
        return kExitInconsistent;
    } else if (*speed && !support_arg.empty()) {
      std::istringstream in(support_arg);
      const auto set = parse_indices(in);
      sldc::Codebook codebook({n, r, d, seed, kmax});
      const sldc::Transcript t = sldc::run_protocol(codebook, set, query_index);
      std::ostringstream out;
      out << "speed_limit_z " << t.z << "\nlength " << t.codeword_length
          << "\nrounds " << t.rounds.size();
      for (const auto& round : t.rounds)
        out << "\nround position " << round.alice_position << " -> "
            << round.bob_bit;
      out << "\nanswer " << t.answer << "\nalice_bits " << t.alice_bits_sent
          << "\nbob_bits " << t.bob_bits_sent;
      emit(out.str(), out_path);
    } else if (*speed) {
      const auto stats =
          sldc::protocol_cost_experiment({n, r, d, seed, kmax}, trials, seed);
      const json j{{"trials", stats.trials},
                   {"mean_pow2z", stats.mean_pow2z},
                   {"ci95_pow2z", stats.ci95_pow2z},
                   {"mean_length", stats.mean_length},
                   {"bound", stats.bound},
                   {"mean_within_bound", stats.mean_within_bound}};
      emit(j.dump(2), out_path);
    }
  } catch (const sldc::SearchCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSearchCap;
  } catch (const sldc::InconsistentCodeword& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const sldc::ContainerError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContainer;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
