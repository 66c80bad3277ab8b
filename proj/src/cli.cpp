#include "gromov/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include "gromov/class_expr.hpp"
#include "gromov/error.hpp"
#include "gromov/fibersum.hpp"
#include "gromov/invariants.hpp"
#include "gromov/model_io.hpp"
#include "gromov/presets.hpp"
#include "gromov/spherical.hpp"
#include "gromov/structure.hpp"
#include "gromov/torus_series.hpp"

namespace gromov {

namespace {

/// Thrown for flag combinations CLI11 cannot express.
struct UsageError : Error {
  explicit UsageError(const std::string &what) : Error("usage", what) {}
};

struct Options {
  std::string manifold;
  std::vector<std::string> classes;
  std::optional<Int> genus;
  std::optional<Int> points;
  std::string tori;
  std::optional<Int> k;
  std::string candidates;
  std::optional<Int> n;
  std::string format = "human";
};

using Fields = std::vector<std::pair<std::string, std::string>>;

class Printer {
public:
  Printer(std::ostream &out, bool records) : out_(out), records_(records) {}

  void emit(const std::string &human, const Fields &fields) {
    if (records_) {
      for (const auto &[key, value] : fields)
        out_ << key << '=' << value << '\n';
    } else {
      out_ << human << '\n';
    }
  }

private:
  std::ostream &out_;
  bool records_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

ManifoldModel load(const Options &o) {
  if (o.manifold.empty())
    throw UsageError("--manifold is required for this command");
  std::error_code ec;
  if (std::filesystem::is_regular_file(o.manifold, ec))
    return load_model_file(o.manifold);
  return preset(o.manifold);
}

std::vector<HClass> classes(const ManifoldModel &m, const Options &o,
                            std::size_t min_count) {
  if (o.classes.size() < min_count)
    throw UsageError("expected at least " + std::to_string(min_count) +
                     " --class argument(s)");
  std::vector<HClass> out;
  for (const auto &e : o.classes)
    out.push_back(m.parse(e));
  return out;
}

std::vector<std::string> split_commas(const std::string &text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    parts.push_back(item);
  return parts;
}

std::string braces(const std::vector<HClass> &parts) {
  std::string s = "{";
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? ", " : "") + format_class(parts[i]);
  return s + "}";
}

std::string strip_text(const std::vector<Strip> &strips) {
  std::string s;
  for (std::size_t i = 0; i < strips.size(); ++i)
    s += (i ? "," : "") + format_class(strips[i].exceptional) + ":" +
         std::to_string(strips[i].multiplicity);
  return s;
}

/// "expr", "expr:mult" or "expr:mult:genus".
Component parse_component(const ManifoldModel &m, const std::string &text) {
  std::vector<std::string> pieces;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':'))
    pieces.push_back(item);
  if (pieces.empty() || pieces.size() > 3)
    throw ParseError("component '" + text + "' must be expr[:mult[:genus]]");
  auto number = [&](const std::string &s) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size())
        throw std::invalid_argument(s);
      return static_cast<Int>(v);
    } catch (const std::exception &) {
      throw ParseError("malformed integer '" + s + "' in component '" + text +
                       "'");
    }
  };
  Component c{m.parse(pieces[0]), 1, 0};
  if (pieces.size() > 1)
    c.mult = number(pieces[1]);
  if (pieces.size() > 2)
    c.genus = number(pieces[2]);
  return c;
}

void print_report(Printer &p, const std::string &name, const Report &r) {
  p.emit(name + ": " + (r.passed() ? "pass" : "fail"),
         {{name, r.passed() ? "pass" : "fail"}});
  for (const auto &c : r.clauses) {
    std::string human = "  " + c.id + " " + (c.pass ? "pass" : "fail");
    if (!c.witnesses.empty())
      human += " " + braces(c.witnesses);
    if (!c.detail.empty())
      human += " (" + c.detail + ")";
    Fields f{{name + "." + c.id, c.pass ? "pass" : "fail"}};
    if (!c.witnesses.empty())
      f.emplace_back(name + "." + c.id + ".witnesses", braces(c.witnesses));
    p.emit(human, f);
  }
}

void cmd_presets(Printer &p) {
  for (const auto &info : preset_registry()) {
    const std::string name =
        info.params.empty() ? info.name : info.name + "(n), " + info.params;
    p.emit(name + "  " + info.summary, {{"preset", info.name}});
  }
}

void cmd_scalar(Printer &p, const Options &o, const std::string &command) {
  const ManifoldModel m = load(o);
  for (const auto &a : classes(m, o, 1)) {
    const std::string s = format_class(a);
    if (command == "k") {
      const Int v = k(a);
      p.emit("k(" + s + ") = " + std::to_string(v),
             {{"class", s}, {"k", std::to_string(v)}});
    } else if (command == "kprime") {
      const Int v = k_prime(m, a);
      p.emit("k'(" + s + ") = " + std::to_string(v),
             {{"class", s}, {"kprime", std::to_string(v)}});
    } else if (command == "genus") {
      const Int v = genus_embedded(a);
      p.emit("genus(" + s + ") = " + std::to_string(v),
             {{"class", s}, {"genus", std::to_string(v)}});
    } else if (command == "dim") {
      const Int g = o.genus.value_or(0);
      const Int v = moduli_dimension(a, g);
      p.emit("dim(" + s + ", g=" + std::to_string(g) +
                 ") = " + std::to_string(v),
             {{"class", s}, {"genus", std::to_string(g)},
              {"dim", std::to_string(v)}});
    } else if (command == "good") {
      const bool v = is_good_class(m, a);
      p.emit("good(" + s + ") = " + yes_no(v), {{"class", s}, {"good", yes_no(v)}});
    } else if (command == "reduce") {
      const Reduction r = reduce_multicovers(m, a);
      std::string human = "reduce(" + s + ") = " + format_class(r.reduced);
      if (!r.strips.empty())
        human += "  strips " + strip_text(r.strips);
      p.emit(human, {{"class", s},
                     {"reduced", format_class(r.reduced)},
                     {"strips", strip_text(r.strips)},
                     {"consistent", yes_no(r.consistent)}});
    } else if (command == "classify-neg") {
      const NegClassVerdict v = classify_negative(a);
      if (v.witness) {
        const auto &w = *v.witness;
        p.emit("classify(" + s + ") = exceptional-sphere (g=" +
                   std::to_string(w.genus) + ", c1=" + std::to_string(w.c1) +
                   ", square=" + std::to_string(w.square) + ")",
               {{"class", s},
                {"verdict", "exceptional-sphere"},
                {"genus", std::to_string(w.genus)},
                {"c1", std::to_string(w.c1)},
                {"square", std::to_string(w.square)}});
      } else {
        p.emit("classify(" + s + ") = not-representable",
               {{"class", s}, {"verdict", "not-representable"}});
      }
    } else if (command == "cone") {
      const bool closed = in_forward_cone(a, false);
      const bool strict = in_forward_cone(a, true);
      p.emit("cone(" + s + "): closed " + yes_no(closed) + ", strict " +
                 yes_no(strict),
             {{"class", s}, {"closed", yes_no(closed)}, {"strict", yes_no(strict)}});
    }
  }
}

void cmd_lightcone(Printer &p, const Options &o) {
  const ManifoldModel m = load(o);
  const auto cs = classes(m, o, 2);
  if (cs.size() != 2)
    throw UsageError("lightcone takes exactly two --class arguments");
  const LightConeReport r = light_cone_pair_check(cs[0], cs[1]);
  std::string human = "lightcone(" + format_class(cs[0]) + ", " +
                      format_class(cs[1]) + "): product " +
                      std::to_string(r.product) + ", " +
                      (r.passed ? "pass" : "fail");
  if (!r.detail.empty())
    human += " (" + r.detail + ")";
  p.emit(human, {{"product", std::to_string(r.product)},
                 {"proportional_nulls", yes_no(r.proportional_nulls)},
                 {"pass", yes_no(r.passed)}});
}

std::optional<std::vector<HClass>> candidate_list(const ManifoldModel &m,
                                                  const Options &o) {
  if (o.candidates.empty())
    return std::nullopt;
  std::vector<HClass> out;
  for (const auto &e : split_commas(o.candidates))
    out.push_back(m.parse(e));
  return out;
}

std::vector<HClass> default_candidates(const ManifoldModel &m,
                                       const HClass &a) {
  std::vector<HClass> out{a};
  for (const auto &[key, v] : m.gr0_table())
    out.push_back(key);
  for (const auto &[key, v] : m.torus_table())
    out.push_back(key);
  return out;
}

void cmd_decomp(Printer &p, const Options &o) {
  const ManifoldModel m = load(o);
  const HClass a = classes(m, o, 1).front();
  const auto cands = candidate_list(m, o).value_or(default_candidates(m, a));
  const auto ds = enumerate_decompositions(m, a, cands);
  p.emit("decompositions of " + format_class(a) + ": " +
             std::to_string(ds.size()),
         {{"class", format_class(a)}, {"count", std::to_string(ds.size())}});
  for (const auto &d : ds)
    p.emit("  " + braces(d.parts), {{"decomposition", braces(d.parts)}});
}

void cmd_gr(Printer &p, const Options &o) {
  const ManifoldModel m = load(o);
  for (const auto &a : classes(m, o, 1)) {
    const auto cands = candidate_list(m, o);
    const BigInt v = cands ? gromov_via_decompositions(m, a, *cands)
                           : gromov_via_decompositions(m, a);
    p.emit("Gr(" + format_class(a) + ") = " + to_string(v),
           {{"class", format_class(a)}, {"gr", to_string(v)}});
  }
}

void cmd_gr_tori(Printer &p, const Options &o) {
  if (!o.k)
    throw UsageError("gr-tori needs --k");
  const auto tori = parse_torus_list(o.tori);
  const BigInt v = gr_torus_class(tori, *o.k);
  p.emit(to_string(v), {{"tori", o.tori},
                        {"k", std::to_string(*o.k)},
                        {"count", to_string(v)}});
}

void cmd_gr_s(Printer &p, const Options &o) {
  const ManifoldModel m = load(o);
  for (const auto &a : classes(m, o, 1)) {
    const GrS g = gr_s_detail(m, a);
    p.emit("Gr_s(" + format_class(a) + ") = " + to_string(g.value),
           {{"class", format_class(a)}, {"gr_s", to_string(g.value)}});
    for (const auto &cfg : g.configs)
      p.emit("  " + braces(cfg.parts) + " k=" + std::to_string(cfg.k) +
                 " p=" + std::to_string(cfg.p),
             {{"config", braces(cfg.parts)},
              {"config.k", std::to_string(cfg.k)},
              {"config.p", std::to_string(cfg.p)}});
    if (g.ambiguous)
      p.emit("  warning: repeated class with count > 1; point assignment "
             "factor is a convention",
             {{"warning", "ambiguous-assignment"}});
  }
}

void cmd_fibersum(Printer &p, const Options &o) {
  if (!o.n)
    throw UsageError("fibersum needs --n");
  const EllipticFiber r = gr_elliptic_fiber(*o.n);
  for (const auto &s : r.trace)
    p.emit(s.step + "  [" + s.constant + "]  running " +
               std::to_string(s.running),
           {{"step", s.step},
            {"constant", s.constant},
            {"running", std::to_string(s.running)}});
  p.emit("Gr(V(" + std::to_string(*o.n) + "), F) = " + std::to_string(r.value),
         {{"n", std::to_string(*o.n)}, {"value", std::to_string(r.value)}});
}

void cmd_verify(Printer &p, const Options &o) {
  const ManifoldModel m = load(o);
  if (o.classes.empty())
    throw UsageError("verify needs at least one --class component");
  std::vector<Component> comps;
  for (const auto &text : o.classes)
    comps.push_back(parse_component(m, text));
  const Configuration cfg(std::move(comps));
  const HClass total = cfg.total();
  p.emit("total " + format_class(total), {{"total", format_class(total)}});
  print_report(p, "good",
               verify_good_configuration(m, cfg, o.points.value_or(k(total))));
  print_report(p, "kprime", verify_kprime_configuration(m, cfg, o.points));
}

int exit_code_for(const Error &e) {
  if (dynamic_cast<const ParseError *>(&e) ||
      dynamic_cast<const UsageError *>(&e))
    return 2;
  if (e.code() == "unknown-preset" || e.code() == "preset-param")
    return 2;
  return 1;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Homology-level calculus of Gromov invariants", "gromov"};
  app.fallthrough();
  app.require_subcommand(1);

  Options o;
  app.add_option("--manifold", o.manifold, "preset name or model file");
  app.add_option("--class", o.classes, "class expression (repeatable)");
  app.add_option("--genus", o.genus, "genus for dim");
  app.add_option("--points", o.points, "number of point constraints");
  app.add_option("--tori", o.tori, "torus list, e.g. +0,+0,-1:2");
  app.add_option("--k", o.k, "coefficient index for gr-tori");
  app.add_option("--candidates", o.candidates, "comma-separated classes");
  app.add_option("--n", o.n, "number of fiber-summed copies for fibersum");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"human", "records"}));

  const std::vector<std::pair<std::string, std::string>> commands{
      {"presets", "list built-in models"},
      {"k", "point count k(A)"},
      {"kprime", "corrected point count k'(A)"},
      {"genus", "genus of an embedded representative"},
      {"dim", "moduli space dimension"},
      {"good", "no multiply covered exceptional components"},
      {"reduce", "strip multiply covered exceptional spheres"},
      {"classify-neg", "classify a negative-square class"},
      {"cone", "forward cone membership"},
      {"lightcone", "light cone check for two classes"},
      {"decomp", "list decompositions"},
      {"gr", "Gromov invariant via decompositions"},
      {"gr-tori", "count from a list of labelled tori"},
      {"gr-s", "spherical invariant"},
      {"fibersum", "fiber-class invariant of V(n)"},
      {"verify", "check a curve configuration (--class expr[:mult[:genus]])"},
  };
  for (const auto &[name, help] : commands)
    app.add_subcommand(name, help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error code=usage msg=" << one_line(e.what()) << '\n';
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::ostringstream buffer;
  Printer bp(buffer, o.format == "records");
  try {
    if (command == "presets")
      cmd_presets(bp);
    else if (command == "lightcone")
      cmd_lightcone(bp, o);
    else if (command == "decomp")
      cmd_decomp(bp, o);
    else if (command == "gr")
      cmd_gr(bp, o);
    else if (command == "gr-tori")
      cmd_gr_tori(bp, o);
    else if (command == "gr-s")
      cmd_gr_s(bp, o);
    else if (command == "fibersum")
      cmd_fibersum(bp, o);
    else if (command == "verify")
      cmd_verify(bp, o);
    else
      cmd_scalar(bp, o, command);
  } catch (const Error &e) {
    err << "error code=" << e.code() << " msg=" << one_line(e.what()) << '\n';
    return exit_code_for(e);
  } catch (const std::exception &e) {
    err << "error code=internal msg=" << one_line(e.what()) << '\n';
    return 1;
  }
  out << buffer.str();
  return 0;
}

} // namespace gromov
