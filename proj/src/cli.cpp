#include "trisect/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "trisect/cube.hpp"
#include "trisect/group.hpp"
#include "trisect/invariants.hpp"
#include "trisect/io.hpp"

namespace trisect::cli {

namespace {

constexpr std::size_t kDefaultBudget = 10000;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

TrisectionDiagram load_trisection(const std::string& path, std::istream& in) {
  AnyDiagram d = parse_diagram(read_input(path, in));
  if (auto* t = std::get_if<TrisectionDiagram>(&d)) return std::move(*t);
  throw UsageError("this command needs a trisection diagram, '" + (path.empty() ? std::string("-") : path) +
                   "' is a Heegaard diagram");
}

Family family_option(const std::string& name) {
  if (auto f = parse_family(name)) return *f;
  throw UsageError("unknown family '" + name + "' (expected alpha, beta or gamma)");
}

void write_form_lines(std::ostream& out, const TrisectionDiagram& d, const std::string& prefix) {
  try {
    const IntMatrix q = intersection_form(d);
    const FormInvariants f = form_invariants(q);
    out << prefix << "rank: " << f.rank << '\n'
        << prefix << "signature: " << f.signature << '\n'
        << prefix << "parity: " << parity_name(f.parity) << '\n';
  } catch (const UnsupportedError& e) {
    out << prefix << "rank: unsupported\n"
        << prefix << "signature: unsupported\n"
        << prefix << "parity: unsupported\n";
  }
}

int cmd_validate(const std::string& path, std::istream& in, std::ostream& out) {
  const AnyDiagram d = parse_diagram(read_input(path, in));
  if (const auto* t = std::get_if<TrisectionDiagram>(&d)) {
    const auto ks = pair_ks(*t);
    out << "kind: trisection\n"
        << "genus: " << t->genus() << '\n'
        << "k: " << ks[0] << ' ' << ks[1] << ' ' << ks[2] << '\n';
  } else {
    const auto& h = std::get<HeegaardDiagram>(d);
    out << "kind: heegaard\n" << "genus: " << h.genus << '\n';
  }
  out << "valid: yes\n";
  return kSuccess;
}

int cmd_invariants(const std::string& path, std::istream& in, std::ostream& out) {
  const AnyDiagram any = parse_diagram(read_input(path, in));
  if (const auto* h = std::get_if<HeegaardDiagram>(&any)) {
    const auto g = static_cast<std::size_t>(h->genus);
    const QuotientInvariants h1 = quotient_invariants(2 * g, h->first.matrix().stacked(h->second.matrix()));
    out << "kind: heegaard\n"
        << "genus: " << h->genus << '\n'
        << "k: " << (h1.torsion.empty() ? std::to_string(h1.free_rank) : "none") << '\n'
        << "H1: " << h1.to_string() << '\n';
    return kSuccess;
  }
  const auto& d = std::get<TrisectionDiagram>(any);
  const auto ks = pair_ks(d);
  const Homology h = homology_of_x(d);
  out << "kind: trisection\n"
      << "genus: " << d.genus() << '\n'
      << "k: " << ks[0] << ' ' << ks[1] << ' ' << ks[2] << '\n'
      << "euler_characteristic: " << euler_characteristic(d) << '\n';
  for (std::size_t i = 0; i < 5; ++i) out << 'H' << i << ": " << h[i].to_string() << '\n';
  write_form_lines(out, d, "form_");
  return kSuccess;
}

int cmd_pi1(const std::string& path, std::optional<std::size_t> budget, std::istream& in, std::ostream& out) {
  Presentation p = pi1_presentation(load_trisection(path, in));
  std::optional<TietzeOutcome> outcome;
  if (budget) {
    outcome = tietze_run(p, *budget);
    p = outcome->presentation;
  }
  out << "generators: " << p.generator_count() << '\n'
      << "relators: " << p.relators.size() << '\n'
      << "presentation: " << p.to_string() << '\n'
      << "abelianization: " << abelianize_presentation(p).to_string() << '\n';
  if (outcome) {
    out << "tietze_steps: " << outcome->steps << '\n'
        << "fixpoint: " << (outcome->fixpoint ? "yes" : "no") << '\n';
  }
  return kSuccess;
}

int cmd_form(const std::string& path, std::istream& in, std::ostream& out) {
  const IntMatrix q = intersection_form(load_trisection(path, in));
  const FormInvariants f = form_invariants(q);
  out << "form: " << q.to_string() << '\n'
      << "rank: " << f.rank << '\n'
      << "signature: " << f.signature << '\n'
      << "parity: " << parity_name(f.parity) << '\n';
  return kSuccess;
}

int cmd_homcount(const std::string& path, const std::string& target, const std::string& cap_text,
                 std::size_t budget, std::istream& in, std::ostream& out) {
  int n = 0;
  if (target == "s3") n = 3;
  else if (target == "s4") n = 4;
  else if (target == "s5") n = 5;
  else throw UsageError("unknown target '" + target + "' (expected s3, s4 or s5)");
  Integer cap;
  if (cap_text.empty()) {
    cap = default_hom_cap();
  } else if (cap.set_str(cap_text, 10) != 0 || cap < 0) {
    throw UsageError("--cap expects a nonnegative integer");
  }
  const Presentation p = tietze_simplify(pi1_presentation(load_trisection(path, in)), budget);
  const Integer count = count_homs(p, n, cap);
  out << "target: S" << n << '\n'
      << "generators: " << p.generator_count() << '\n'
      << "count: " << count.get_str() << '\n';
  return kSuccess;
}

int cmd_cube(const std::string& path, bool dot, std::optional<std::size_t> budget, std::istream& in,
             std::ostream& out, std::ostream& err) {
  const GroupTrisectionCube cube = build_cube(load_trisection(path, in));
  if (dot) {
    out << emit_cube_dot(cube);
  } else {
    for (std::size_t v = 0; v < kCubeVertexCount; ++v) {
      const auto vertex = static_cast<CubeVertex>(v);
      const Presentation& p = cube.vertex(vertex);
      const QuotientInvariants ab = abelianize_presentation(p);
      out << "vertex " << vertex_name(vertex) << ": abelianization " << ab.to_string() << ", generators "
          << p.generator_count() << ", relators " << p.relators.size() << '\n';
    }
    out << "edges: " << cube.edges.size() << '\n';
  }
  if (!budget) return kSuccess;

  const CubeReport report = verify_cube(cube, *budget);
  std::ostream& sink = dot ? err : out;
  for (const auto& m : report.maps) {
    sink << "map " << vertex_name(m.source) << " -> " << vertex_name(m.target) << ": " << status_name(m.status)
         << '\n';
  }
  for (const auto& f : report.faces) {
    sink << "face " << vertex_name(f.face[0]) << '/' << vertex_name(f.face[1]) << '/' << vertex_name(f.face[2])
         << '/' << vertex_name(f.face[3]) << ": " << status_name(f.status) << " (" << f.detail << ")\n";
  }
  sink << "failed_maps: " << report.count_maps(CheckStatus::Failed) << '\n'
       << "failed_faces: " << report.count_faces(CheckStatus::Failed) << '\n';
  const bool ok = report.count_maps(CheckStatus::Failed) == 0 && report.count_faces(CheckStatus::Failed) == 0;
  return ok ? kSuccess : kCheckFailed;
}

int cmd_poincare(const std::string& path, std::size_t budget, std::istream& in, std::ostream& out) {
  const PoincareReport r = poincare_candidate_check(load_trisection(path, in), budget);
  out << "homology_matches_S4: " << (r.homology_matches_s4 ? "true" : "false") << '\n'
      << "pi1_trivialized: " << (r.pi1_trivialized ? "true" : "false") << '\n'
      << "verdict: " << verdict_name(r.verdict) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trisection diagrams of 4-manifolds: validation, moves and invariants", "trisect"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  std::string family;
  std::string name;
  std::string target;
  std::string cap;
  std::string conj;
  std::size_t curve = 0;
  std::size_t over = 0;
  int sign = 1;
  bool dot = false;
  std::size_t budget = kDefaultBudget;

  auto* validate = app.add_subcommand("validate", "check a diagram file");
  validate->add_option("FILE", file, "diagram file, '-' for stdin");

  auto* invariants = app.add_subcommand("invariants", "k-triple, Euler characteristic, homology, form");
  invariants->add_option("FILE", file, "diagram file, '-' for stdin");

  auto* pi1 = app.add_subcommand("pi1", "fundamental group presentation");
  pi1->add_option("FILE", file, "diagram file, '-' for stdin");
  auto* simplify = pi1->add_option("--simplify", budget, "Tietze step budget");

  auto* form = app.add_subcommand("form", "Gram matrix of the intersection form");
  form->add_option("FILE", file, "diagram file, '-' for stdin");

  auto* stabilize_cmd = app.add_subcommand("stabilize", "stabilize, giving the new meridian to FAMILY");
  stabilize_cmd->add_option("FILE", file, "diagram file, '-' for stdin");
  stabilize_cmd->add_option("--family", family, "alpha, beta or gamma")->required();

  auto* slide = app.add_subcommand("slide", "slide one curve over another (1-based indices)");
  slide->add_option("FILE", file, "diagram file, '-' for stdin");
  slide->add_option("--family", family, "alpha, beta or gamma")->required();
  slide->add_option("--curve", curve, "curve to move")->required();
  slide->add_option("--over", over, "curve slid over")->required();
  slide->add_option("--conj", conj, "conjugating word, e.g. 'a1 B2'");
  slide->add_option("--sign", sign, "+1 or -1");

  auto* sum = app.add_subcommand("connect-sum", "connected sum of two diagrams");
  sum->add_option("FILE1", file, "first diagram")->required();
  sum->add_option("FILE2", file2, "second diagram")->required();

  auto* standard = app.add_subcommand("standard", "print a standard diagram");
  standard->add_option("NAME", name, "S4, CP2, CP2BAR, S1xS3 or S2xS2")->required();

  auto* homcount = app.add_subcommand("homcount", "count homomorphisms of pi1 into a symmetric group");
  homcount->add_option("FILE", file, "diagram file, '-' for stdin");
  homcount->add_option("--target", target, "s3, s4 or s5")->required();
  homcount->add_option("--cap", cap, "largest enumeration cost accepted");
  homcount->add_option("--simplify", budget, "Tietze step budget applied first");

  auto* cube = app.add_subcommand("cube", "group trisection cube");
  cube->add_option("FILE", file, "diagram file, '-' for stdin");
  cube->add_flag("--dot", dot, "emit Graphviz DOT");
  auto* verify = cube->add_option("--verify", budget, "verify maps and faces with this Tietze budget");

  auto* poincare = app.add_subcommand("poincare-check", "screen a diagram as a homotopy 4-sphere candidate");
  poincare->add_option("FILE", file, "diagram file, '-' for stdin");
  poincare->add_option("--simplify", budget, "Tietze step budget");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, in, out);
    if (invariants->parsed()) return cmd_invariants(file, in, out);
    if (pi1->parsed()) {
      return cmd_pi1(file, simplify->count() ? std::optional<std::size_t>(budget) : std::nullopt, in, out);
    }
    if (form->parsed()) return cmd_form(file, in, out);
    if (stabilize_cmd->parsed()) {
      out << serialize(stabilize(load_trisection(file, in), family_option(family)));
      return kSuccess;
    }
    if (slide->parsed()) {
      const Family f = family_option(family);
      if (curve == 0 || over == 0) throw UsageError("curve indices are 1-based");
      const Word c = Word::parse(conj);
      out << serialize(handle_slide(load_trisection(file, in), f, curve - 1, over - 1, c, sign));
      return kSuccess;
    }
    if (sum->parsed()) {
      const TrisectionDiagram a = load_trisection(file, in);
      const TrisectionDiagram b = load_trisection(file2, in);
      out << serialize(connected_sum(a, b));
      return kSuccess;
    }
    if (standard->parsed()) {
      const auto& names = standard_diagram_names();
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw UsageError("unknown standard diagram '" + name + "'");
      }
      out << serialize(standard_diagram(name));
      return kSuccess;
    }
    if (homcount->parsed()) return cmd_homcount(file, target, cap, budget, in, out);
    if (cube->parsed()) {
      return cmd_cube(file, dot, verify->count() ? std::optional<std::size_t>(budget) : std::nullopt, in, out, err);
    }
    if (poincare->parsed()) return cmd_poincare(file, budget, in, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const RefusedError& e) {
    err << "error: " << e.what() << '\n';
    return kRefused;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsageError;
}

}  // namespace trisect::cli
