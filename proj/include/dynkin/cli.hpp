#pragma once

// Command-line front end. run() takes argv-style arguments and explicit
// streams so it can be driven from tests.
//
// Exit status: 0 success, 1 domain error, 2 usage error, 3 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dynkin/catalog.hpp"
#include "dynkin/classify.hpp"
#include "dynkin/enumerate.hpp"
#include "dynkin/extension.hpp"
#include "dynkin/gcm.hpp"
#include "dynkin/io.hpp"
#include "dynkin/symmetrize.hpp"
#include "dynkin/verify.hpp"
#include "dynkin/weyl.hpp"

namespace dynkin::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kVerificationFailed = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string inline_matrix;
  std::string format = "text";
};

namespace detail {

inline std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Gcm load_matrix(const InputOptions& opts, std::istream& in) {
  if (!opts.path.empty() && !opts.inline_matrix.empty())
    throw UsageError("give either --input or --matrix, not both");
  if (!opts.inline_matrix.empty()) {
    std::string text = opts.inline_matrix;
    for (char& c : text)
      if (c == ';') c = '\n';
    return parse_matrix_input(text);
  }
  if (opts.path.empty() || opts.path == "-") return parse_matrix_input(read_all(in));
  std::ifstream file(opts.path);
  if (!file) throw std::runtime_error("cannot open " + opts.path);
  return parse_matrix_input(read_all(file));
}

inline std::string vertex_list(const std::vector<std::size_t>& vs, char open = '{', char close = '}') {
  std::string s(1, open);
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? "," : "") + std::to_string(vs[k] + 1);
  return s + close;
}

inline ordered_json vertices_json(const std::vector<std::size_t>& vs) {
  ordered_json out = ordered_json::array();
  for (auto v : vs) out.push_back(v + 1);
  return out;
}

inline ordered_json witness_json(const UnbalancedCycleWitness& w) {
  ordered_json j;
  j["cycle"] = vertices_json(w.cycle);
  j["forward_product"] = w.forward_product;
  j["reverse_product"] = w.reverse_product;
  return j;
}

inline std::string witness_text(const UnbalancedCycleWitness& w) {
  return "witness=" + vertex_list(w.cycle, '(', ')') + "\nforward_product=" + std::to_string(w.forward_product) +
         "\nreverse_product=" + std::to_string(w.reverse_product) + "\n";
}

inline std::string d_text(const std::vector<std::int64_t>& d) {
  std::string s = "diag(";
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s + ")";
}

inline void emit_text_matrix(std::ostream& out, const Gcm& m) {
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (std::size_t j = 0; j < m.rank(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

/// Everything `classify` reports, as structured JSON.
inline ordered_json classify_record(const Gcm& m) {
  ordered_json j;
  j["rank"] = m.rank();
  j["matrix"] = matrix_json(m);
  const auto comps = classify(m);
  j["indecomposable"] = comps.size() == 1;
  ordered_json cj = ordered_json::array();
  for (const auto& c : comps) {
    ordered_json x;
    x["vertices"] = vertices_json(c.vertices);
    x["kind"] = to_string(c.type.kind);
    x["hyperbolic"] = c.type.hyperbolic;
    x["compact"] = c.type.compact_hyperbolic;
    cj.push_back(std::move(x));
  }
  j["components"] = cj;
  if (comps.size() == 1) {
    j["kind"] = to_string(comps[0].type.kind);
    j["hyperbolic"] = comps[0].type.hyperbolic;
    j["compact"] = comps[0].type.compact_hyperbolic;
  } else {
    j["kind"] = nullptr;
    j["hyperbolic"] = false;
    j["compact"] = false;
  }
  const auto sym = is_symmetrizable(m);
  j["symmetrizable"] = sym.symmetrizable;
  if (sym.symmetrizable) {
    const auto d = *dynkin::detail::component_symmetrizer(m);
    j["symmetrizer"] = d;
    j["root_lengths"] = comps.size() == 1 ? ordered_json(Symmetrization{d}.distinct_values()) : ordered_json(nullptr);
    j["witness"] = nullptr;
  } else {
    j["symmetrizer"] = nullptr;
    j["root_lengths"] = nullptr;
    j["witness"] = witness_json(*sym.witness);
  }
  j["orbit_blocks"] = blocks_json(orbit_partition(m));
  j["orbit_semantics"] = sym.symmetrizable ? "verified" : "unverified";
  return j;
}

inline void emit_classify_text(std::ostream& out, const ordered_json& j) {
  auto flag = [](const ordered_json& v) { return v.get<bool>() ? "true" : "false"; };
  out << "rank=" << j["rank"].get<std::size_t>() << '\n';
  if (j["indecomposable"].get<bool>()) {
    out << "kind=" << j["kind"].get<std::string>() << '\n';
    out << "hyperbolic=" << flag(j["hyperbolic"]) << '\n';
    out << "compact=" << flag(j["compact"]) << '\n';
  } else {
    out << "components=" << j["components"].size() << '\n';
    for (const auto& c : j["components"]) {
      std::vector<std::size_t> vs;
      for (const auto& v : c["vertices"]) vs.push_back(v.get<std::size_t>() - 1);
      out << "component " << vertex_list(vs) << ": kind=" << c["kind"].get<std::string>()
          << " hyperbolic=" << flag(c["hyperbolic"]) << " compact=" << flag(c["compact"]) << '\n';
    }
  }
  out << "symmetrizable=" << flag(j["symmetrizable"]) << '\n';
  if (!j["symmetrizer"].is_null()) out << "symmetrizer=" << d_text(j["symmetrizer"].get<std::vector<std::int64_t>>()) << '\n';
  else out << "symmetrizer=N.S.\n";
  if (!j["root_lengths"].is_null()) out << "root_lengths=" << j["root_lengths"].get<std::size_t>() << '\n';
  OrbitPartition p;
  for (const auto& b : j["orbit_blocks"]) {
    std::vector<std::size_t> block;
    for (const auto& v : b) block.push_back(v.get<std::size_t>() - 1);
    p.blocks.push_back(std::move(block));
  }
  out << "orbit_blocks=" << blocks_inline(p) << '\n';
  out << "orbit_semantics=" << j["orbit_semantics"].get<std::string>() << '\n';
}

inline void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format " + format);
}

inline int cmd_classify(const InputOptions& io, std::istream& in, std::ostream& out) {
  require_format(io.format, {"text", "json"});
  const auto rec = classify_record(load_matrix(io, in));
  if (io.format == "json") out << rec.dump() << '\n';
  else emit_classify_text(out, rec);
  return kOk;
}

inline int cmd_symmetrize(const InputOptions& io, std::istream& in, std::ostream& out) {
  require_format(io.format, {"text", "json"});
  const auto m = load_matrix(io, in);
  const auto sym = is_symmetrizable(m);
  ordered_json j;
  j["symmetrizable"] = sym.symmetrizable;
  if (sym.symmetrizable) {
    const auto d = *dynkin::detail::component_symmetrizer(m);
    j["symmetrizer"] = d;
    j["bilinear_form"] = bilinear_form(m);
    j["witness"] = nullptr;
  } else {
    j["symmetrizer"] = nullptr;
    j["bilinear_form"] = nullptr;
    j["witness"] = witness_json(*sym.witness);
  }
  if (io.format == "json") {
    out << j.dump() << '\n';
  } else if (sym.symmetrizable) {
    out << "symmetrizable=true\nsymmetrizer=" << d_text(j["symmetrizer"].get<std::vector<std::int64_t>>()) << '\n';
    out << "bilinear_form=";
    const auto b = bilinear_form(m);
    for (std::size_t i = 0; i < b.size(); ++i) {
      out << (i ? ";" : "");
      for (std::size_t k = 0; k < b.size(); ++k) out << (k ? " " : "") << b[i][k];
    }
    out << '\n';
  } else {
    out << "symmetrizable=false\n" << witness_text(*sym.witness);
  }
  return sym.symmetrizable ? kOk : kDomainError;
}

inline int cmd_orbits(const InputOptions& io, int height, std::istream& in, std::ostream& out) {
  require_format(io.format, {"text", "json"});
  const auto m = load_matrix(io, in);
  const auto skeleton = orbit_partition(m);
  const bool sym = is_symmetrizable(m).symmetrizable;
  std::optional<OrbitPartition> brute;
  if (height > 0) brute = orbit_partition_bruteforce(m, height);
  if (io.format == "json") {
    ordered_json j;
    j["orbit_blocks"] = blocks_json(skeleton);
    j["orbit_semantics"] = sym ? "verified" : "unverified";
    j["bruteforce_blocks"] = brute ? blocks_json(*brute) : ordered_json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << "orbit_blocks=" << blocks_inline(skeleton) << '\n';
    out << "orbit_semantics=" << (sym ? "verified" : "unverified") << '\n';
    if (brute) out << "bruteforce_blocks=" << blocks_inline(*brute) << " (height <= " << height << ")\n";
  }
  return brute && *brute != skeleton ? kVerificationFailed : kOk;
}

inline int cmd_extend(const InputOptions& io, const std::string& mode, std::size_t zero_vertex, std::istream& in,
                      std::ostream& out) {
  require_format(io.format, {"text", "json"});
  const auto m = load_matrix(io, in);
  Gcm result = m;
  std::size_t new_vertex = m.rank() + 1;
  if (mode == "affine") {
    result = extend_finite_to_affine(m);
  } else if (mode == "overextend") {
    const std::size_t zv = zero_vertex == 0 ? m.rank() : zero_vertex;
    if (zv > m.rank()) throw UsageError("--zero-vertex out of range");
    result = overextend_affine(m, zv - 1);
  } else {
    throw UsageError("--mode must be affine or overextend");
  }
  const auto comps = classify(result);
  const auto& type = comps.front().type;
  if (io.format == "json") {
    ordered_json j;
    j["rank"] = result.rank();
    j["matrix"] = matrix_json(result);
    j["new_vertex"] = new_vertex;
    j["kind"] = to_string(type.kind);
    j["hyperbolic"] = type.hyperbolic;
    out << j.dump() << '\n';
  } else {
    out << "# new vertex " << new_vertex << "; kind=" << to_string(type.kind)
        << " hyperbolic=" << (type.hyperbolic ? "true" : "false") << '\n';
    emit_text_matrix(out, result);
  }
  return kOk;
}

struct EnumerateOptions {
  std::size_t min_rank = 3;
  std::size_t max_rank = 10;
  std::string out_path;
  std::string format = "jsonl";
  unsigned jobs = 1;
  bool oracle = false;
};

inline int cmd_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err) {
  if (o.format != "jsonl" && o.format != "tsv" && o.format != "latex")
    throw UsageError("unsupported --format " + o.format);
  if (o.min_rank < 3 || o.min_rank > o.max_rank || o.max_rank > kMaxEnumerationRank)
    throw UsageError("need 3 <= --min-rank <= --max-rank <= " + std::to_string(kMaxEnumerationRank));
  const auto matrices = enumerate_hyperbolic_matrices(o.min_rank, o.max_rank, {o.jobs});
  const auto entries = build_catalog(matrices);

  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + o.out_path);
    if (o.format == "jsonl") write_catalog(file, entries);
    else if (o.format == "tsv") write_catalog_tsv(file, entries);
    else write_catalog_latex(file, entries);
  }

  int status = kOk;
  if (o.oracle) {
    for (std::size_t r = o.min_rank; r <= std::min<std::size_t>(o.max_rank, 5); ++r) {
      const auto reference = enumerate_hyperbolic_unpruned(r);
      std::vector<Gcm> ours;
      for (const auto& m : matrices)
        if (m.rank() == r) ours.push_back(m);
      const bool same = reference == ours;
      out << "oracle rank=" << r << " pruned=" << ours.size() << " unpruned=" << reference.size()
          << (same ? " match" : " MISMATCH") << '\n';
      if (!same) status = kVerificationFailed;
    }
    if (o.max_rank > 5) err << "note: the unpruned oracle covers ranks <= 5 only\n";
  }
  const auto s = summarize(entries);
  for (const auto& [rank, n] : s.per_rank) out << "rank=" << rank << " count=" << n << '\n';
  out << "total=" << s.total << " symmetrizable=" << s.symmetrizable << '\n';
  return status;
}

inline int cmd_verify(const std::string& in_path, int height, std::size_t samples, std::ostream& out) {
  std::ifstream file(in_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + in_path);
  const auto entries = read_catalog(file);
  VerifyOptions opts;
  opts.orbit_height = height;
  opts.orbit_height_limit = std::max(height, 64);
  opts.random_samples = samples;
  if (const char* seed = std::getenv("DYNKIN_SEED")) opts.seed = std::strtoull(seed, nullptr, 10);
  const auto report = verify_catalog(entries, opts);
  print_report(out, report);
  out << (report.passed() ? "verification passed" : "verification FAILED") << '\n';
  return report.passed() ? kOk : kVerificationFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classification and enumeration of generalized Cartan matrices and Dynkin diagrams", "dynkin"};
  app.require_subcommand(1);

  auto add_input = [](CLI::App* sub, InputOptions& io) {
    sub->add_option("--input", io.path, "matrix file (text or JSON); '-' reads stdin");
    sub->add_option("--matrix", io.inline_matrix, "inline matrix, rows separated by ';'");
    sub->add_option("--format", io.format, "text or json")->capture_default_str();
  };

  InputOptions classify_io, symmetrize_io, orbits_io, extend_io;
  auto* classify_cmd = app.add_subcommand("classify", "type, symmetrizability, root lengths and orbits");
  add_input(classify_cmd, classify_io);
  auto* symmetrize_cmd = app.add_subcommand("symmetrize", "symmetrizing diagonal or an unbalanced cycle");
  add_input(symmetrize_cmd, symmetrize_io);
  auto* orbits_cmd = app.add_subcommand("orbits", "Weyl-orbit blocks of the simple roots");
  add_input(orbits_cmd, orbits_io);
  int orbit_height = 0;
  orbits_cmd->add_option("--height", orbit_height, "also run the reflection oracle with this height window");

  auto* extend_cmd = app.add_subcommand("extend", "affine extension or overextension");
  add_input(extend_cmd, extend_io);
  std::string mode;
  std::size_t zero_vertex = 0;
  extend_cmd->add_option("--mode", mode, "affine or overextend")->required();
  extend_cmd->add_option("--zero-vertex", zero_vertex, "1-based affine node for overextend (default: last)");

  detail::EnumerateOptions enum_opts;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate hyperbolic diagrams");
  enumerate_cmd->add_option("--min-rank", enum_opts.min_rank)->capture_default_str();
  enumerate_cmd->add_option("--max-rank", enum_opts.max_rank)->capture_default_str();
  enumerate_cmd->add_option("--out", enum_opts.out_path, "catalog output path");
  enumerate_cmd->add_option("--format", enum_opts.format, "jsonl, tsv or latex")->capture_default_str();
  enumerate_cmd->add_option("--jobs", enum_opts.jobs, "worker threads")->capture_default_str();
  enumerate_cmd->add_flag("--oracle", enum_opts.oracle, "cross-check ranks <= 5 with the unpruned enumeration");

  std::string verify_in;
  int verify_height = 8;
  std::size_t verify_samples = 10000;
  auto* verify_cmd = app.add_subcommand("verify-catalog", "check catalog properties");
  verify_cmd->add_option("--in", verify_in, "catalog file")->required();
  verify_cmd->add_option("--height", verify_height, "height window for the reflection-orbit oracle")
      ->capture_default_str();
  verify_cmd->add_option("--samples", verify_samples, "random GCMs for the symmetrizability cross-check")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("dynkin");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*classify_cmd) return detail::cmd_classify(classify_io, in, out);
    if (*symmetrize_cmd) return detail::cmd_symmetrize(symmetrize_io, in, out);
    if (*orbits_cmd) return detail::cmd_orbits(orbits_io, orbit_height, in, out);
    if (*extend_cmd) return detail::cmd_extend(extend_io, mode, zero_vertex, in, out);
    if (*enumerate_cmd) return detail::cmd_enumerate(enum_opts, out, err);
    if (*verify_cmd) {
      if (verify_height < 1) throw UsageError("--height must be positive");
      return detail::cmd_verify(verify_in, verify_height, verify_samples, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace dynkin::cli
