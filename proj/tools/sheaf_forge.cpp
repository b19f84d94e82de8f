// sheaf-forge: command line front end for the sheafforge library.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sheafforge/golden.hpp"
#include "sheafforge/linspace.hpp"
#include "sheafforge/modification.hpp"
#include "sheafforge/parse.hpp"
#include "sheafforge/report.hpp"

namespace sf = sheafforge;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string order;
  std::string json_path;
  std::string at;
  int degree_bound = 6;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Replaces (or adds) the order section of the ring header.
std::string override_order(const std::string& text, const std::string& order) {
  if (order.empty()) return text;
  if (order != "lex" && order != "degrevlex") throw UsageError("--order must be lex or degrevlex");
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  bool done = false;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t");
    if (!done && first != std::string::npos && line.compare(first, 4, "ring") == 0) {
      std::size_t pos = line.find("| order:");
      if (pos != std::string::npos) {
        std::size_t next = line.find('|', pos + 1);
        line.erase(pos, next == std::string::npos ? std::string::npos : next - pos);
      }
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
      line += " | order: " + order;
      done = true;
    }
    out << line << "\n";
  }
  return out.str();
}

sf::ParsedInput load(const std::string& path, const Globals& g) {
  return sf::parse_input(override_order(read_file(path), g.order));
}

std::vector<std::string> strings(const sf::RingPtr& r, const std::vector<sf::Polynomial>& ps) {
  std::vector<std::string> out;
  for (const sf::Polynomial& p : ps) out.push_back(r->format(p));
  return out;
}

std::string joined(const std::vector<std::string>& xs) {
  std::string s;
  for (const std::string& x : xs) s += (s.empty() ? "" : ", ") + x;
  return "(" + s + ")";
}

ordered_json vec_json(const sf::RingPtr& r, const sf::Vec& v) { return strings(r, v); }

void emit_json(const Globals& g, const std::string& text) {
  if (g.json_path.empty()) return;
  std::ofstream out(g.json_path);
  if (!out) throw UsageError("cannot write " + g.json_path);
  out << text;
}

void emit_json(const Globals& g, ordered_json j) {
  if (g.json_path.empty()) return;
  ordered_json full;
  full["schema_version"] = sf::kReportSchemaVersion;
  for (auto& [k, v] : j.items()) full[k] = v;
  emit_json(g, full.dump(2) + "\n");
}

std::vector<sf::Rational> point_for(const sf::RingPtr& r, const Globals& g) {
  if (g.at.empty()) return std::vector<sf::Rational>(r->nvars(), sf::Rational(0));
  std::vector<sf::Rational> p = sf::parse_point(g.at);
  if (p.size() != r->nvars()) throw UsageError("--at needs " + std::to_string(r->nvars()) + " coordinates");
  return p;
}

// ---- commands ----------------------------------------------------------------

int cmd_gb(const std::string& file, const Globals& g) {
  sf::ParsedInput in = load(file, g);
  sf::Ideal i = sf::input_ideal(in);
  std::vector<std::string> basis = strings(in.ring, i.reduced_generators());
  std::cout << in.ring->header() << "\n";
  for (const std::string& b : basis) std::cout << "  " << b << "\n";
  emit_json(g, ordered_json{{"command", "gb"}, {"ring", in.ring->header()}, {"basis", basis}});
  return kOk;
}

int cmd_member(const std::string& file, const std::string& poly, const Globals& g) {
  sf::ParsedInput in = load(file, g);
  bool yes = sf::membership(in.ring->parse(poly), sf::input_ideal(in));
  std::cout << (yes ? "member" : "not a member") << "\n";
  emit_json(g, ordered_json{{"command", "member"}, {"polynomial", poly}, {"member", yes}});
  return kOk;
}

int cmd_sat(const std::string& file, const std::string& by, const Globals& g) {
  sf::ParsedInput in = load(file, g);
  sf::SaturationResult s = sf::saturate(sf::input_ideal(in), in.ring->parse(by));
  std::vector<std::string> gens = strings(in.ring, s.ideal.reduced_generators());
  std::cout << "saturation: " << joined(gens) << "\nexponent:   " << s.exponent << "\n";
  emit_json(g, ordered_json{{"command", "sat"}, {"by", by}, {"ideal", gens}, {"exponent", s.exponent}});
  return kOk;
}

int cmd_classify(const std::string& file, const Globals& g) {
  sf::ParsedInput in = load(file, g);
  sf::Presentation p = sf::input_presentation(in);
  sf::ClassifyReport c = sf::classify_sheaf(p, point_for(in.ring, g));
  std::cout << sf::classify_text(c);
  emit_json(g, sf::classify_json(c));
  return c.thm12_consistent.value_or(true) ? kOk : kCheckFailed;
}

int cmd_torsion(const std::string& file, const Globals& g) {
  sf::ParsedInput in = load(file, g);
  sf::TorsionResult t = sf::torsion_submodule(sf::input_presentation(in));
  const sf::RingPtr& r = in.ring;
  ordered_json gens = ordered_json::array();
  if (t.torsion_generators.empty()) std::cout << "torsion-free\n";
  for (std::size_t i = 0; i < t.torsion_generators.size(); ++i) {
    std::vector<std::string> c = strings(r, t.torsion_generators[i].coords);
    std::cout << "torsion class " << joined(c) << "  killed by " << r->format(t.witnesses[i]) << "\n";
    gens.push_back({{"class", c}, {"witness", r->format(t.witnesses[i])}});
  }
  if (t.saturating_element) std::cout << "saturating element " << r->format(*t.saturating_element) << "\n";
  if (!t.torsion_generators.empty()) std::cout << "quotient: " << t.quotient.to_string();
  emit_json(g, ordered_json{{"command", "torsion"},
                            {"torsion_free", t.torsion_generators.empty()},
                            {"torsion", gens},
                            {"whole_module", t.whole_module}});
  return kOk;
}

int cmd_linspace(const std::string& file, bool pc, const std::string& witness, int power, const Globals& g) {
  sf::ParsedInput in = load(file, g);
  sf::LinearSpaceIdeal l = sf::linear_space_ideal(sf::input_presentation(in));
  const sf::RingPtr& r = l.joint_ring;
  std::vector<std::string> gens = strings(r, l.ideal.generators());
  std::cout << "joint ring: " << r->header() << "\nJ = " << joined(gens) << "\n";
  ordered_json j{{"command", "linspace"}, {"joint_ring", r->header()}, {"ideal", gens}};
  int code = kOk;
  if (pc) {
    sf::PrimaryComponentIdeal p = sf::primary_component(l);
    std::vector<std::string> b = strings(r, p.ideal.reduced_generators());
    bool linear = sf::pc_is_linear(p);
    std::cout << "primary component: " << joined(b) << "\nfiberwise linear: " << (linear ? "yes" : "no") << "\n";
    j["primary_component"] = b;
    j["pc_is_linear"] = linear;
  }
  if (!witness.empty()) {
    if (power < 2) throw UsageError("--power must be at least 2");
    sf::ReducednessVerdict v = sf::reducedness_witness(l.ideal, r->parse(witness), power);
    std::cout << "witness " << witness << ": " << (v.confirmed ? "confirmed" : "rejected") << " (" << v.detail << ")\n";
    j["witness"] = {{"polynomial", witness}, {"power", power}, {"confirmed", v.confirmed}, {"detail", v.detail}};
    if (!v.confirmed) code = kCheckFailed;
  }
  emit_json(g, j);
  return code;
}

sf::Modification modification_for(int n, const std::string& center, int codim) {
  if (n < 1) throw UsageError("--n must be positive");
  if (center == "origin") return sf::blowup_origin(static_cast<std::size_t>(n));
  if (center == "subspace") {
    if (codim < 1 || codim > n) throw UsageError("--codim must lie in 1..n");
    return sf::blowup_coordinate_subspace(static_cast<std::size_t>(n), static_cast<std::size_t>(codim));
  }
  throw UsageError("--center must be origin or subspace");
}

// The same presentation over another ring with the same variable names.
sf::Presentation rehome(const sf::Presentation& p, const sf::RingPtr& to) {
  auto move = [&](const sf::Polynomial& f) { return to->parse(p.ring()->format(f)); };
  std::vector<sf::Vec> cols;
  for (const sf::Vec& c : p.relations()) {
    sf::Vec v;
    for (const sf::Polynomial& e : c) v.push_back(move(e));
    cols.push_back(std::move(v));
  }
  std::optional<std::vector<sf::Polynomial>> gens;
  if (p.ideal_generators()) {
    gens.emplace();
    for (const sf::Polynomial& e : *p.ideal_generators()) gens->push_back(move(e));
  }
  return sf::Presentation(to, p.num_generators(), std::move(cols), std::move(gens));
}

int cmd_blowup(int n, const std::string& center, int codim, const std::string& file, const std::string& op,
               const Globals& g) {
  sf::Modification m = modification_for(n, center, codim);
  sf::ParsedInput in = load(file, g);
  if (in.ring->names() != m.base->names() || !in.ring->is_free()) {
    throw UsageError("sheaf must live on " + m.base->header());
  }
  sf::Presentation p = rehome(sf::input_presentation(in), m.base);

  std::cout << m.describe() << "\n";
  ordered_json j{{"command", "blowup"}, {"modification", m.describe()}, {"op", op}};
  if (op == "pullback" || op == "pT") {
    ordered_json charts = ordered_json::array();
    if (op == "pullback") {
      std::vector<sf::Presentation> pb = sf::pullback(p, m);
      for (std::size_t i = 0; i < pb.size(); ++i) {
        std::cout << "chart " << i + 1 << ": " << pb[i].to_string();
        ordered_json cols = ordered_json::array();
        for (const sf::Vec& c : pb[i].relations()) cols.push_back(vec_json(pb[i].ring(), c));
        charts.push_back({{"ring", pb[i].ring()->header()}, {"relations", cols}});
      }
    } else {
      std::vector<sf::ChartTransform> t = sf::torsion_free_pullback(p, m);
      for (std::size_t i = 0; i < t.size(); ++i) {
        const sf::RingPtr& r = m.charts[i].ring;
        std::cout << "chart " << i + 1 << ": " << t[i].presentation.to_string();
        ordered_json c{{"ring", r->header()}, {"torsion_removed", t[i].torsion.size()}};
        if (t[i].transform_ideal) {
          std::vector<std::string> gens = strings(r, t[i].transform_ideal->reduced_generators());
          std::cout << "  transform ideal " << joined(gens) << "\n";
          c["transform_ideal"] = gens;
        }
        charts.push_back(c);
      }
    }
    j["charts"] = charts;
  } else if (op == "pushforward") {
    if (!p.ideal_generators()) throw UsageError("pushforward needs an ideal sheaf");
    sf::Ideal s(m.base, *p.ideal_generators());
    sf::Ideal push = sf::pushforward_ideal(sf::transform_ideals(s, m), m);
    std::vector<std::string> gens = strings(m.base, push.reduced_generators());
    std::cout << "pushforward of the transform: " << joined(gens) << "\n";
    j["pushforward"] = gens;
    if (n == 2 && m.kind == sf::ModificationKind::kBlowupOrigin) {
      sf::SectionsResult sec = sf::truncated_global_sections(sf::pullback(p, m), m, g.degree_bound);
      std::vector<std::string> img = strings(m.base, sec.image.reduced_generators());
      std::cout << "sections of the pullback (D = " << sec.degree_bound << (sec.stable ? ", stable" : ", not stable")
                << "): " << joined(img) << "\n";
      j["sections"] = {{"image", img}, {"degree_bound", sec.degree_bound}, {"stable", sec.stable}};
    }
  } else if (op == "chain") {
    if (n != 2 || m.kind != sf::ModificationKind::kBlowupOrigin) throw UsageError("chain needs --n 2 --center origin");
    if (!p.ideal_generators()) throw UsageError("chain needs an ideal sheaf");
    sf::ChainReport c = sf::verify_injection_chain(p, m, g.degree_bound);
    auto show = [&](const sf::Ideal& i) { return strings(m.base, i.reduced_generators()); };
    std::cout << "S            = " << joined(show(c.sheaf)) << "\n"
              << "pi_* pi^* S  = " << joined(show(c.sections)) << (c.sections_stable ? "  (stable)" : "  (not stable)")
              << "\npi_* pi^T S  = " << joined(show(c.transform)) << "\n"
              << "chain holds: " << (c.holds() ? "yes" : "no") << "\n";
    if (c.first_witness) std::cout << "first inclusion strict, witness " << m.base->format(*c.first_witness) << "\n";
    if (c.second_witness) std::cout << "second inclusion strict, witness " << m.base->format(*c.second_witness) << "\n";
    j["sheaf"] = show(c.sheaf);
    j["sections"] = show(c.sections);
    j["transform"] = show(c.transform);
    j["sections_stable"] = c.sections_stable;
    j["holds"] = c.holds();
    j["first_witness"] = c.first_witness ? ordered_json(m.base->format(*c.first_witness)) : ordered_json(nullptr);
    j["second_witness"] = c.second_witness ? ordered_json(m.base->format(*c.second_witness)) : ordered_json(nullptr);
    emit_json(g, j);
    return c.holds() ? kOk : kCheckFailed;
  } else {
    throw UsageError("--op must be pullback, pT, pushforward or chain");
  }
  emit_json(g, j);
  return kOk;
}

int cmd_canonical(int n, const std::string& center, int codim, const Globals& g) {
  sf::Modification m = modification_for(n, center, codim);
  sf::DivisorOnBlowup d = sf::canonical_multiplicity(m);
  std::cout << m.describe() << "\n";
  for (std::size_t i = 0; i < d.multiplicity.size(); ++i) {
    std::cout << "chart " << i + 1 << ": K = " << d.multiplicity[i] << " E\n";
  }
  emit_json(g, ordered_json{{"command", "canonical"}, {"modification", m.describe()}, {"multiplicity", d.multiplicity}});
  return kOk;
}

int cmd_verify(const std::vector<std::string>& only, const std::string& markdown, bool fault, const Globals& g) {
  sf::GoldenOptions o;
  o.only = only;
  o.degree_bound = g.degree_bound;
  o.inject_saturation_fault = fault;
  for (const std::string& p : only) {
    bool known = false;
    for (const std::string& id : sf::golden_check_ids()) known = known || id.rfind(p, 0) == 0;
    if (!known) throw UsageError("--only " + p + " matches no check");
  }
  sf::Report r = sf::verify_paper(o);
  std::string md = sf::report_markdown(r);
  std::cout << md;
  if (!markdown.empty()) {
    std::ofstream out(markdown);
    if (!out) throw UsageError("cannot write " + markdown);
    out << md;
  }
  emit_json(g, sf::report_json(r));
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sheaf-forge: coherent sheaves as finitely presented modules, blow-ups as charts"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--order", g.order, "Monomial order for input rings (lex, degrevlex)");
  app.add_option("--json", g.json_path, "Also write the result as JSON to this path");
  app.add_option("--at", g.at, "Point for local invariants, e.g. 0,0 (default: origin)");
  app.add_option("--degree-bound", g.degree_bound, "Degree bound for truncated sections")->check(CLI::Range(1, 40));

  std::string file, poly, by, witness, center = "origin", op = "pullback", markdown;
  int power = 2, n = 2, codim = 0;
  bool pc = false, fault = false;
  std::vector<std::string> only;

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal");
  gb->add_option("file", file, "Input file")->required();
  auto* member = app.add_subcommand("member", "Ideal membership");
  member->add_option("file", file, "Input file")->required();
  member->add_option("polynomial", poly, "Polynomial to test")->required();
  auto* sat = app.add_subcommand("sat", "Saturation (I : f^inf) and its exponent");
  sat->add_option("file", file, "Input file")->required();
  sat->add_option("--by", by, "Polynomial f")->required();
  auto* classify = app.add_subcommand("classify", "Rank, corank, singular locus, torsion and hom-dim at a point");
  classify->add_option("file", file, "Input file")->required();
  auto* torsion = app.add_subcommand("torsion", "Torsion submodule with annihilator witnesses");
  torsion->add_option("file", file, "Input file")->required();
  auto* linspace = app.add_subcommand("linspace", "Linear fiber space of a sheaf");
  linspace->add_option("file", file, "Input file")->required();
  linspace->add_flag("--pc", pc, "Also compute the primary component");
  linspace->add_option("--witness", witness, "Nilpotent candidate g in the joint ring");
  linspace->add_option("--power", power, "Power k with g^k expected in the ideal");
  auto* blowup = app.add_subcommand("blowup", "Pullback, transform and pushforward under a blow-up");
  blowup->add_option("--n", n, "Dimension of the base");
  blowup->add_option("--center", center, "origin or subspace");
  blowup->add_option("--codim", codim, "Codimension of a subspace center");
  blowup->add_option("--sheaf", file, "Input file")->required();
  blowup->add_option("--op", op, "pullback, pT, pushforward or chain");
  auto* canonical = app.add_subcommand("canonical", "Exceptional multiplicity of the relative canonical divisor");
  canonical->add_option("--n", n, "Dimension of the base");
  canonical->add_option("--center", center, "origin or subspace");
  canonical->add_option("--codim", codim, "Codimension of a subspace center");
  auto* verify = app.add_subcommand("verify-paper", "Run the golden check suite");
  verify->add_option("--only", only, "Run checks whose id starts with this prefix (repeatable)");
  verify->add_option("--markdown", markdown, "Also write the markdown report to this path");
  verify->add_flag("--inject-saturation-fault", fault, "Test hook: stop saturations one step early");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gb) return cmd_gb(file, g);
    if (*member) return cmd_member(file, poly, g);
    if (*sat) return cmd_sat(file, by, g);
    if (*classify) return cmd_classify(file, g);
    if (*torsion) return cmd_torsion(file, g);
    if (*linspace) return cmd_linspace(file, pc, witness, power, g);
    if (*blowup) return cmd_blowup(n, center, codim, file, op, g);
    if (*canonical) return cmd_canonical(n, center, codim, g);
    if (*verify) return cmd_verify(only, markdown, fault, g);
  } catch (const sf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
