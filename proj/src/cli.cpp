#include "sft/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sft/clopen.hpp"
#include "sft/constructions.hpp"
#include "sft/error.hpp"
#include "sft/invariants.hpp"
#include "sft/io.hpp"
#include "sft/random.hpp"
#include "sft/table_map.hpp"
#include "sft/witness_search.hpp"

namespace sft::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void put(const std::string& key, json value) { fields_.emplace_back(key, std::move(value)); }

  void add_checks(const Verification& v, const std::string& prefix = "") {
    for (const Check& c : v.checks) checks_.push_back(Check{prefix + c.name, c.pass});
  }

  bool all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
  }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      json doc;
      doc["command"] = command_;
      for (const auto& [k, v] : fields_) doc[to_lower(k)] = v;
      if (!checks_.empty()) {
        json list = json::array();
        for (const Check& c : checks_) list.push_back({{"name", c.name}, {"pass", c.pass}});
        doc["checks"] = list;
        doc["result"] = all_pass() ? "PASS" : "FAIL";
      }
      out << doc.dump(2) << '\n';
      return;
    }
    out << "COMMAND: " << command_ << '\n';
    for (const auto& [k, v] : fields_) out << k << ": " << text(v) << '\n';
    for (const Check& c : checks_) out << "CHECK: " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << '\n';
    if (!checks_.empty()) out << "RESULT: " << (all_pass() ? "PASS" : "FAIL") << '\n';
  }

 private:
  static std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
  }

  static std::string text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      if (v.empty()) return "(none)";
      std::string out;
      for (const auto& item : v) out += (out.empty() ? "" : "; ") + text(item);
      return out;
    }
    return v.dump();
  }

  std::string command_;
  std::vector<std::pair<std::string, json>> fields_;
  std::vector<Check> checks_;
};

std::string clopen_text(const ClopenSet& X) {
  if (X.is_empty()) return "EMPTY";
  if (X.is_full()) return "FULL";
  std::string out;
  for (const Word& w : X.words()) out += (out.empty() ? "" : " ") + w.to_string();
  return out;
}

json words_json(const std::vector<Word>& words) {
  json list = json::array();
  for (const Word& w : words) list.push_back(io::format_word(w));
  return list;
}

json table_json(const TableMap& g) {
  json list = json::array();
  for (const TableEntry& e : g.entries()) list.push_back(io::format_word(e.domain) + " -> " + io::format_word(e.image));
  return list;
}

std::string relation_name(SetRelation r) {
  switch (r) {
    case SetRelation::Equal: return "equal";
    case SetRelation::Subset: return "subset";
    case SetRelation::Superset: return "superset";
    case SetRelation::Disjoint: return "disjoint";
    case SetRelation::Overlapping: return "overlapping";
  }
  return "overlapping";
}

TransitionMatrix load_matrix(const std::string& path) { return io::parse_matrix(io::read_file(path)); }
ClopenSet load_clopen(const TransitionMatrix& A, const std::string& path) {
  return io::parse_clopen(A, io::read_file(path));
}
TableMap load_table(const TransitionMatrix& A, const std::string& path) {
  return io::parse_table(A, io::read_file(path));
}

void save_table(Report& report, const std::string& key, const std::string& path, const TableMap& g) {
  if (path.empty()) return;
  io::write_file(path, io::format_table(g));
  report.put(key, path);
}

void save_clopen(Report& report, const std::string& key, const std::string& path, const ClopenSet& X) {
  if (path.empty()) return;
  io::write_file(path, io::format_clopen(X));
  report.put(key, path);
}

void describe_table(Report& report, const std::string& prefix, const TableMap& g) {
  report.put(prefix + "DEPTH", g.depth());
  report.put(prefix + "ENTRIES", g.size());
  report.put(prefix + "TABLE", table_json(g));
}

void describe_fixed(Report& report, const TableMap& g) {
  SupportAndFixedSet s = support_and_fixed_set(g);
  report.put("SUPPORT", clopen_text(s.support));
  report.put("FIXED_CLOPEN", clopen_text(s.fixed.clopen_part));
  json points = json::array();
  for (const EPPoint& p : s.fixed.isolated_points) points.push_back(p.to_string());
  report.put("FIXED_POINTS", points);
}

void describe_cocycles(Report& report, const TableMap& g) {
  json list = json::array();
  for (const Cocycle& c : cocycles(g))
    list.push_back(io::format_word(c.domain) + " k=" + std::to_string(c.k) + " l=" + std::to_string(c.l));
  report.put("COCYCLES", list);
}

// Options shared by the construct subcommand.
struct ConstructArgs {
  std::string id;
  std::string matrix;
  std::string U, Y, V, W, W2, O, x, nu, gamma, eta;
  std::string out;
};

const std::string& need(const std::string& value, const char* flag, const std::string& id) {
  if (value.empty()) throw UsageError(std::string("construct ") + id + " requires " + flag);
  return value;
}

void construct(const ConstructArgs& a, Report& report) {
  const TransitionMatrix A = load_matrix(a.matrix);
  const std::string& id = a.id;
  report.put("CONSTRUCTION", id);
  auto clopen = [&](const std::string& value, const char* flag) { return load_clopen(A, need(value, flag, id)); };
  auto table = [&](const std::string& value, const char* flag) { return load_table(A, need(value, flag, id)); };
  auto prefixed = [&](const std::string& suffix) { return a.out.empty() ? std::string() : a.out + suffix; };

  if (id == "2.1") {
    ClopenSet U = clopen(a.U, "--U");
    ClopenSet Y = clopen(a.Y, "--Y");
    EPPoint x = io::parse_point(A, need(a.x, "--x", id));
    InvolutionInto r = involution_into(U, Y, x);
    report.put("V", clopen_text(r.neighbourhood));
    describe_table(report, "", r.alpha);
    save_table(report, "OUTPUT", a.out, r.alpha);
    report.add_checks(verify_involution_into(U, Y, x, r));
  } else if (id == "3.4") {
    ClopenSet U = clopen(a.U, "--U");
    EPPoint x = io::parse_point(A, need(a.x, "--x", id));
    TableMap alpha = moving_involution(U, x);
    report.put("IMAGE_OF_X", apply(alpha, x).to_string());
    describe_table(report, "", alpha);
    save_table(report, "OUTPUT", a.out, alpha);
    report.add_checks(verify_moving_involution(U, x, alpha));
  } else if (id == "2.2") {
    ClopenSet U = clopen(a.U, "--U");
    ClopenSet V = clopen(a.V, "--V");
    TableMap gamma = table(a.gamma, "--gamma");
    TableMap alpha = swap_involution(U, V, gamma);
    describe_table(report, "", alpha);
    save_table(report, "OUTPUT", a.out, alpha);
    report.add_checks(verify_swap_involution(U, V, gamma, alpha));
  } else if (id == "4.1") {
    Word nu = io::parse_word(need(a.nu, "--nu", id));
    ClopenSet V = clopen(a.V, "--V");
    TableMap alpha = cylinder_involution(nu, V);
    describe_table(report, "", alpha);
    save_table(report, "OUTPUT", a.out, alpha);
    report.add_checks(verify_cylinder_involution(nu, V, alpha));
  } else if (id == "4.3") {
    ClopenSet U = clopen(a.U, "--U");
    ClopenSet W = clopen(a.W, "--W");
    Transport t = clopen_transport(U, W);
    report.put("PIECES", words_json(t.pieces));
    describe_table(report, "", t.alpha);
    save_table(report, "OUTPUT", a.out, t.alpha);
    report.add_checks(verify_clopen_transport(U, W, t));
  } else if (id == "4.4") {
    PairedTransportInput in{clopen(a.O, "--O"), clopen(a.U, "--U"),  clopen(a.V, "--V"),
                            clopen(a.W, "--W"), clopen(a.W2, "--W2"), table(a.gamma, "--gamma")};
    PairedTransport r = paired_transport(in);
    report.put("PIECES", r.u_parts.size());
    json u_parts = json::array();
    json v_parts = json::array();
    for (std::size_t i = 0; i < r.u_parts.size(); ++i) {
      u_parts.push_back(clopen_text(r.u_parts[i]));
      v_parts.push_back(clopen_text(r.v_parts[i]));
      const std::string n = std::to_string(i + 1);
      describe_table(report, "ALPHA" + n + "_", r.alphas[i]);
      describe_table(report, "BETA" + n + "_", r.betas[i]);
      save_table(report, "OUTPUT_ALPHA" + n, prefixed(".alpha" + n + ".tbl"), r.alphas[i]);
      save_table(report, "OUTPUT_BETA" + n, prefixed(".beta" + n + ".tbl"), r.betas[i]);
    }
    report.put("U_PARTS", u_parts);
    report.put("V_PARTS", v_parts);
    report.add_checks(verify_paired_transport(in, r));
  } else if (id == "4.7") {
    TableMap gamma = table(a.gamma, "--gamma");
    ClopenSet O = clopen(a.O, "--O");
    auto factors = split_invariant(gamma, O);
    describe_table(report, "GAMMA1_", factors.first);
    describe_table(report, "GAMMA2_", factors.second);
    save_table(report, "OUTPUT_GAMMA1", prefixed(".gamma1.tbl"), factors.first);
    save_table(report, "OUTPUT_GAMMA2", prefixed(".gamma2.tbl"), factors.second);
    report.add_checks(verify_split_invariant(gamma, O, factors));
  } else if (id == "4.10") {
    ClopenSet U = clopen(a.U, "--U");
    ClopenSet V = clopen(a.V, "--V");
    MinimalityWitness r = minimality_witness(U, V);
    report.put("SOURCE", clopen_text(r.source));
    describe_table(report, "", r.gamma);
    save_table(report, "OUTPUT", a.out, r.gamma);
    report.add_checks(verify_minimality_witness(U, V, r));
  } else if (id == "3.11") {
    TableMap eta = table(a.eta, "--eta");
    ClopenSet U = clopen(a.U, "--U");
    ClopenSet O = clopen(a.O, "--O");
    TableMap gamma = localize_conjugate(eta, U, O);
    describe_table(report, "", gamma);
    save_table(report, "OUTPUT", a.out, gamma);
    report.add_checks(verify_localize_conjugate(eta, U, O, gamma));
  } else if (id == "2.4") {
    ClopenSet O = clopen(a.O, "--O");
    FreePair r = free_pair(O);
    report.put("F", clopen_text(r.F));
    describe_table(report, "PSI_", r.psi);
    describe_table(report, "PHI_", r.phi);
    save_table(report, "OUTPUT_PSI", prefixed(".psi.tbl"), r.psi);
    save_table(report, "OUTPUT_PHI", prefixed(".phi.tbl"), r.phi);
    save_clopen(report, "OUTPUT_F", prefixed(".F.clo"), r.F);
    report.add_checks(verify_free_pair(O, r));
  } else {
    throw UsageError("unknown construction id " + id);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for one-sided Markov shifts and their continuous full groups", "sft"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", as_json, "Emit the report as one JSON document");
  CLI::Option* seed_opt = app.add_option("--seed", seed, "Seed for randomized subcommands");

  std::function<void(Report&)> action;
  std::string name;
  auto sub = [&](const char* cmd, const char* help) {
    CLI::App* s = app.add_subcommand(cmd, help);
    s->callback([&name, cmd] { name = cmd; });
    return s;
  };

  std::string mat, mat2, f1, f2, f3, out_path, out_path2, op;
  std::size_t k = 0;

  auto* validate_cmd = sub("validate-matrix", "Validate a transition matrix");
  validate_cmd->add_option("matrix", mat)->required();

  auto* words_cmd = sub("words", "List B_k(X_A)");
  words_cmd->add_option("matrix", mat)->required();
  words_cmd->add_option("k", k)->required();

  std::size_t uniform_depth = 0;
  auto* clopen_cmd = sub("clopen", "Boolean algebra of clopen sets");
  clopen_cmd->add_option("op", op)
      ->required()
      ->check(CLI::IsMember({"union", "intersection", "difference", "complement", "compare", "canonicalize"}));
  clopen_cmd->add_option("matrix", mat)->required();
  clopen_cmd->add_option("X", f1)->required();
  clopen_cmd->add_option("Y", f2);
  clopen_cmd->add_option("-o,--output", out_path);
  clopen_cmd->add_option("--uniform-depth", uniform_depth, "Also list the result as words of this length");

  auto* table_validate_cmd = sub("table-validate", "Validate a table file");
  table_validate_cmd->add_option("matrix", mat)->required();
  table_validate_cmd->add_option("table", f1)->required();

  auto* compose_cmd = sub("compose", "t2 o t1");
  compose_cmd->add_option("matrix", mat)->required();
  compose_cmd->add_option("t2", f1)->required();
  compose_cmd->add_option("t1", f2)->required();
  compose_cmd->add_option("-o,--output", out_path);

  auto* inverse_cmd = sub("inverse", "Inverse element");
  inverse_cmd->add_option("matrix", mat)->required();
  inverse_cmd->add_option("table", f1)->required();
  inverse_cmd->add_option("-o,--output", out_path);

  auto* reduce_cmd = sub("reduce", "Canonical form");
  reduce_cmd->add_option("matrix", mat)->required();
  reduce_cmd->add_option("table", f1)->required();
  reduce_cmd->add_option("-o,--output", out_path);

  std::size_t max_iter = 64;
  auto* order_cmd = sub("order", "Order of an element up to a bound");
  order_cmd->add_option("matrix", mat)->required();
  order_cmd->add_option("table", f1)->required();
  order_cmd->add_option("--max-iter", max_iter);

  auto* support_cmd = sub("support", "Support and fixed-point set");
  support_cmd->add_option("matrix", mat)->required();
  support_cmd->add_option("table", f1)->required();

  auto* cocycles_cmd = sub("cocycles", "Orbit cocycle constants");
  cocycles_cmd->add_option("matrix", mat)->required();
  cocycles_cmd->add_option("table", f1)->required();

  auto* commutes_cmd = sub("commutes", "Do two elements commute");
  commutes_cmd->add_option("matrix", mat)->required();
  commutes_cmd->add_option("t1", f1)->required();
  commutes_cmd->add_option("t2", f2)->required();

  auto* local_cmd = sub("local-member", "Is the element supported in O");
  local_cmd->add_option("matrix", mat)->required();
  local_cmd->add_option("table", f1)->required();
  local_cmd->add_option("O", f2)->required();

  auto* split_cmd = sub("split", "Factor an element leaving O invariant");
  split_cmd->add_option("matrix", mat)->required();
  split_cmd->add_option("table", f1)->required();
  split_cmd->add_option("O", f2)->required();
  split_cmd->add_option("--out-inside", out_path);
  split_cmd->add_option("--out-outside", out_path2);

  auto* verify_cmd = sub("verify", "Re-validate a table and print support, fixed set and cocycles");
  verify_cmd->add_option("matrix", mat)->required();
  verify_cmd->add_option("table", f1)->required();

  ConstructArgs ca;
  auto* construct_cmd = sub("construct", "Run a construction by id and verify its witness");
  construct_cmd->add_option("id", ca.id)
      ->required()
      ->check(CLI::IsMember({"2.1", "2.2", "2.4", "3.4", "3.11", "4.1", "4.3", "4.4", "4.7", "4.10"}));
  construct_cmd->add_option("matrix", ca.matrix)->required();
  construct_cmd->add_option("--U", ca.U, "Clopen file");
  construct_cmd->add_option("--Y", ca.Y, "Clopen file");
  construct_cmd->add_option("--V", ca.V, "Clopen file");
  construct_cmd->add_option("--W", ca.W, "Clopen file");
  construct_cmd->add_option("--W2", ca.W2, "Clopen file (W')");
  construct_cmd->add_option("--O", ca.O, "Clopen file");
  construct_cmd->add_option("--x", ca.x, "Point pre|per");
  construct_cmd->add_option("--nu", ca.nu, "Word");
  construct_cmd->add_option("--gamma", ca.gamma, "Table file");
  construct_cmd->add_option("--eta", ca.eta, "Table file");
  construct_cmd->add_option("-o,--output", ca.out, "Witness file (or prefix for several)");

  SearchBounds bounds;
  std::string maps_from, maps_to, support_in;
  std::size_t want_order = 0;
  auto* search_cmd = sub("witness-search", "Bounded search for a table satisfying the given conditions");
  search_cmd->add_option("matrix", mat)->required();
  search_cmd->add_option("--depth", bounds.depth)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--image-length", bounds.image_length)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--budget", bounds.budget);
  search_cmd->add_option("--maps-from", maps_from, "Clopen file U; requires gamma(U) = V");
  search_cmd->add_option("--maps-to", maps_to, "Clopen file V");
  search_cmd->add_option("--order", want_order, "Exact order");
  search_cmd->add_option("--support-in", support_in, "Clopen file O; requires support inside O");
  search_cmd->add_option("-o,--output", out_path);

  auto* bf_cmd = sub("bf", "Pointed Bowen-Franks invariant");
  bf_cmd->add_option("matrix", mat)->required();

  auto* iso_cmd = sub("decide-iso", "Decide isomorphism of the continuous full groups");
  iso_cmd->add_option("A", mat)->required();
  iso_cmd->add_option("B", mat2)->required();

  auto* class_cmd = sub("clopen-class", "Class of a clopen set in the Bowen-Franks group");
  class_cmd->add_option("matrix", mat)->required();
  class_cmd->add_option("X", f1)->required();

  SearchBounds eq_bounds{2, 3, 2'000'000};
  auto* equiv_cmd = sub("gamma-equiv", "Decide Gamma_A-equivalence of two clopen sets");
  equiv_cmd->add_option("matrix", mat)->required();
  equiv_cmd->add_option("U", f1)->required();
  equiv_cmd->add_option("V", f2)->required();
  equiv_cmd->add_option("--depth", eq_bounds.depth)->check(CLI::PositiveNumber);
  equiv_cmd->add_option("--image-length", eq_bounds.image_length)->check(CLI::PositiveNumber);
  equiv_cmd->add_option("--budget", eq_bounds.budget);
  equiv_cmd->add_option("-o,--output", out_path);

  std::size_t rand_depth = 3;
  std::size_t rand_image = 5;
  auto* random_cmd = sub("random-table", "Random valid table (needs --seed)");
  random_cmd->add_option("matrix", mat)->required();
  random_cmd->add_option("--depth", rand_depth);
  random_cmd->add_option("--image-length", rand_image);
  random_cmd->add_option("-o,--output", out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    const int code = app.exit(e, help_out, err);
    out << help_out.str();
    return code == 0 ? kOk : kUsage;
  }

  Report report(name);
  try {
    if (name == "validate-matrix") {
      TransitionMatrix A = load_matrix(mat);
      report.put("N", A.size());
      report.put("STATUS", "valid");
    } else if (name == "words") {
      TransitionMatrix A = load_matrix(mat);
      auto words = admissible_words(A, k);
      report.put("COUNT", words.size());
      report.put("WORDS", words_json(words));
    } else if (name == "clopen") {
      TransitionMatrix A = load_matrix(mat);
      ClopenSet X = load_clopen(A, f1);
      const bool binary = op != "complement" && op != "canonicalize";
      if (binary && f2.empty()) throw UsageError("clopen " + op + " needs a second set");
      if (op == "compare") {
        report.put("RELATION", relation_name(clopen_compare(X, load_clopen(A, f2))));
      } else {
        ClopenSet R = X;
        if (op == "union") R = unite(X, load_clopen(A, f2));
        if (op == "intersection") R = intersect(X, load_clopen(A, f2));
        if (op == "difference") R = subtract(X, load_clopen(A, f2));
        if (op == "complement") R = complement(X);
        report.put("DEPTH", R.depth());
        report.put("RESULT_SET", clopen_text(R));
        if (uniform_depth > 0) {
          if (uniform_depth < R.depth()) throw UsageError("--uniform-depth is below the depth of the result");
          report.put("UNIFORM_WORDS", words_json(R.words_at_depth(uniform_depth)));
        }
        save_clopen(report, "OUTPUT", out_path, R);
      }
    } else if (name == "table-validate") {
      TransitionMatrix A = load_matrix(mat);
      TableMap g = load_table(A, f1);
      report.put("STATUS", "valid");
      report.put("DEPTH", g.depth());
      report.put("ENTRIES", g.size());
    } else if (name == "compose" || name == "inverse" || name == "reduce") {
      TransitionMatrix A = load_matrix(mat);
      TableMap g = load_table(A, f1);
      TableMap result = name == "compose" ? compose(g, load_table(A, f2))
                        : name == "inverse" ? inverse(g)
                                            : canonical_reduce(g);
      describe_table(report, "", result);
      report.put("IDENTITY", canonical_reduce(result).is_identity());
      save_table(report, "OUTPUT", out_path, result);
    } else if (name == "order") {
      TransitionMatrix A = load_matrix(mat);
      PowerOrder o = power_order(load_table(A, f1), max_iter);
      report.put("BOUND", max_iter);
      if (o.order) {
        report.put("ORDER", *o.order);
      } else {
        report.put("ORDER", o.size_capped ? "exceeds bound (table size cap)" : "exceeds bound");
      }
    } else if (name == "support") {
      TransitionMatrix A = load_matrix(mat);
      describe_fixed(report, load_table(A, f1));
    } else if (name == "cocycles") {
      TransitionMatrix A = load_matrix(mat);
      describe_cocycles(report, load_table(A, f1));
    } else if (name == "commutes") {
      TransitionMatrix A = load_matrix(mat);
      report.put("COMMUTES", commutes(load_table(A, f1), load_table(A, f2)));
    } else if (name == "local-member") {
      TransitionMatrix A = load_matrix(mat);
      report.put("MEMBER", in_local_subgroup(load_table(A, f1), load_clopen(A, f2)));
    } else if (name == "split") {
      TransitionMatrix A = load_matrix(mat);
      TableMap g = load_table(A, f1);
      ClopenSet O = load_clopen(A, f2);
      auto factors = split_invariant(g, O);
      describe_table(report, "INSIDE_", factors.first);
      describe_table(report, "OUTSIDE_", factors.second);
      save_table(report, "OUTPUT_INSIDE", out_path, factors.first);
      save_table(report, "OUTPUT_OUTSIDE", out_path2, factors.second);
      report.add_checks(verify_split_invariant(g, O, factors));
    } else if (name == "verify") {
      TransitionMatrix A = load_matrix(mat);
      TableMap g = load_table(A, f1);
      report.put("STATUS", "valid");
      describe_table(report, "", g);
      describe_fixed(report, g);
      describe_cocycles(report, g);
    } else if (name == "construct") {
      construct(ca, report);
    } else if (name == "witness-search") {
      TransitionMatrix A = load_matrix(mat);
      if (maps_from.empty() != maps_to.empty()) throw UsageError("--maps-from and --maps-to go together");
      std::optional<ClopenSet> from, to, region;
      if (!maps_from.empty()) {
        from = load_clopen(A, maps_from);
        to = load_clopen(A, maps_to);
      }
      if (!support_in.empty()) region = load_clopen(A, support_in);
      auto predicate = [&](const TableMap& g) {
        if (region && !in_local_subgroup(g, *region)) return false;
        if (from && image_clopen(g, *from) != *to) return false;
        if (want_order > 0) {
          auto o = power_order(g, want_order);
          if (o.order != std::optional<std::size_t>(want_order)) return false;
        }
        return true;
      };
      SearchResult r = witness_search(A, predicate, bounds);
      report.put("EXAMINED", r.examined);
      if (r.witness) {
        report.put("RESULT_STATUS", "found");
        describe_table(report, "", *r.witness);
        save_table(report, "OUTPUT", out_path, *r.witness);
      } else {
        report.put("RESULT_STATUS", r.budget_exhausted ? "budget_exhausted" : "exhausted");
      }
    } else if (name == "bf") {
      TransitionMatrix A = load_matrix(mat);
      PointedInvariant inv = bowen_franks(A);
      report.put("GROUP", describe(inv.group));
      report.put("FREE_RANK", inv.group.free_rank);
      report.put("INVARIANT_FACTORS", inv.group.torsion);
      report.put("UNIT", describe(inv.unit));
      report.put("DET_A_MINUS_I", inv.det);
    } else if (name == "decide-iso") {
      IsoReport r = full_group_iso_decide(load_matrix(mat), load_matrix(mat2));
      report.put("GROUP_A", describe(r.a.group));
      report.put("UNIT_A", describe(r.a.unit));
      report.put("DET_A", r.a.det);
      report.put("GROUP_B", describe(r.b.group));
      report.put("UNIT_B", describe(r.b.unit));
      report.put("DET_B", r.b.det);
      report.put("POINTED", to_string(r.pointed.verdict));
      report.put("REASON", r.reason);
      report.put("VERDICT", to_string(r.verdict));
    } else if (name == "clopen-class") {
      TransitionMatrix A = load_matrix(mat);
      PointedInvariant inv = bowen_franks(A);
      report.put("GROUP", describe(inv.group));
      report.put("CLASS", describe(clopen_class(inv.group, load_clopen(A, f1))));
    } else if (name == "gamma-equiv") {
      TransitionMatrix A = load_matrix(mat);
      EquivalenceReport r = gamma_equivalent(load_clopen(A, f1), load_clopen(A, f2), eq_bounds);
      report.put("CLASS_U", describe(r.class_u));
      report.put("CLASS_V", describe(r.class_v));
      report.put("EXAMINED", r.examined);
      report.put("REASON", r.reason);
      report.put("NOTE", "class certificate rests on the K-theoretic identification of cylinder classes");
      if (r.witness) {
        describe_table(report, "WITNESS_", *r.witness);
        save_table(report, "OUTPUT", out_path, *r.witness);
      }
      report.put("VERDICT", to_string(r.verdict));
    } else if (name == "random-table") {
      if (seed_opt->count() == 0) throw UsageError("random-table needs an explicit --seed");
      TransitionMatrix A = load_matrix(mat);
      random::Engine rng(seed);
      TableMap g = random::table(rng, A, rand_depth, rand_image);
      report.put("SEED", seed);
      describe_table(report, "", g);
      save_table(report, "OUTPUT", out_path, g);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    if (as_json) {
      json doc{{"command", name}, {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
      out << doc.dump(2) << '\n';
    } else {
      out << "COMMAND: " << name << '\n' << "ERROR: " << e.what() << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  report.print(out, as_json);
  return report.all_pass() ? kOk : kFailure;
}

}  // namespace sft::cli
