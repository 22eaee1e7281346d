#include "kahler/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "kahler/constructions.hpp"
#include "kahler/error.hpp"
#include "kahler/kaehler.hpp"
#include "kahler/presentation_io.hpp"

namespace kahler::cli {

namespace {

// Bad input that is not a grammar error: missing files, wrong verbs for the
// input, and so on.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Settings {
  bool json = false;
  bool no_timing = false;
  std::uint64_t seed = 1;
  std::size_t budget = GroebnerOptions{}.step_budget;
  std::size_t cap = kDefaultStaircaseLimit;
  std::string file;
  std::string base = "field";

  ConstructionOptions construction() const {
    ConstructionOptions o;
    o.algebra.groebner.step_budget = budget;
    o.algebra.dimension_cap = cap;
    o.dimension_cap = cap;
    o.timing = !no_timing;
    return o;
  }
  AlgebraOptions algebra() const { return construction().algebra; }
  BaseKind base_kind() const { return base == "degree0" ? BaseKind::DegreeZero : BaseKind::CoefficientField; }
};

Presentation load_presentation(const std::string& path) {
  if (path.empty()) throw InputError("this verb needs --file <presentation>");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_presentation(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

AlgebraPtr load_algebra(const Settings& s) { return make_quotient(load_presentation(s.file), s.algebra()); }

Polynomial parse_element(std::string_view text, const RingPtr& ring, const std::string& what) {
  try {
    return parse_polynomial(text, ring);
  } catch (const ParseError& e) {
    throw InputError(what + ": " + e.what());
  }
}

std::string vector_text(const ModuleVector& v) { return v.is_zero() ? "0" : v.to_string(); }

// Map files:
//   source <presentation path>
//   target <presentation path>
//   map X -> <polynomial in the target ring>
// Paths are relative to the map file.
AlgebraMap load_map(const std::string& path, const Settings& s) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  const std::filesystem::path dir = std::filesystem::path(path).parent_path();
  std::optional<std::string> source_path, target_path;
  struct Line {
    std::string var, image;
    std::size_t line, column;
  };
  std::vector<Line> maps;
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg, std::size_t col) {
    throw InputError(path + ":" + ParseError(msg, line_no, col).what());
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    for (std::size_t i = 0; i < line.size(); ++i)
      if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line.resize(i);
        break;
      }
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t key_end = line.find_first_of(" \t", start);
    std::string key = line.substr(start, key_end == std::string::npos ? std::string::npos : key_end - start);
    std::size_t rest = key_end == std::string::npos ? line.size() : line.find_first_not_of(" \t", key_end);
    if (rest == std::string::npos) rest = line.size();
    std::string value = line.substr(rest);
    while (!value.empty() && (value.back() == ' ' || value.back() == '\t' || value.back() == '\r')) value.pop_back();
    if (key == "source" || key == "target") {
      if (value.empty()) fail("expected a path after '" + key + "'", rest + 1);
      std::string resolved = (dir / value).string();
      (key == "source" ? source_path : target_path) = resolved;
    } else if (key == "map") {
      std::size_t arrow = value.find("->");
      if (arrow == std::string::npos) fail("expected 'map <variable> -> <polynomial>'", rest + 1);
      std::string var = value.substr(0, arrow);
      while (!var.empty() && (var.back() == ' ' || var.back() == '\t')) var.pop_back();
      std::size_t image_start = value.find_first_not_of(" \t", arrow + 2);
      if (var.empty()) fail("missing variable before '->'", rest + 1);
      if (image_start == std::string::npos) fail("missing image after '->'", rest + arrow + 3);
      maps.push_back({var, value.substr(image_start), line_no, rest + image_start + 1});
    } else {
      fail("unknown directive '" + key + "'", start + 1);
    }
  }
  if (!source_path) throw InputError(path + ": missing 'source' line");
  if (!target_path) throw InputError(path + ": missing 'target' line");
  AlgebraPtr source = make_quotient(load_presentation(*source_path), s.algebra());
  AlgebraPtr target = make_quotient(load_presentation(*target_path), s.algebra());
  std::vector<std::optional<Polynomial>> images(source->ring()->nvars());
  for (const auto& m : maps) {
    auto idx = source->ring()->index_of(m.var);
    if (!idx) throw InputError(path + ":" + std::to_string(m.line) + ": '" + m.var + "' is not a source variable");
    if (images[*idx]) throw InputError(path + ":" + std::to_string(m.line) + ": '" + m.var + "' mapped twice");
    try {
      images[*idx] = parse_polynomial(m.image, target->ring());
    } catch (const ParseError& e) {
      throw InputError(path + ":" + ParseError(e.message(), m.line, m.column + e.column() - 1).what());
    }
  }
  std::vector<Polynomial> list;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw InputError(path + ": no image for source variable " + source->ring()->names()[i]);
    list.push_back(*images[i]);
  }
  return make_map(source, target, std::move(list));
}

void emit(std::ostream& out, const Settings& s, const Json& json, const std::string& text) {
  if (s.json)
    out << json.dump(2) << '\n';
  else
    out << text;
}

int emit_report(std::ostream& out, const Settings& s, const VerificationReport& report) {
  if (s.json)
    out << report.to_json(!s.no_timing).dump(2) << '\n';
  else
    out << report.to_text();
  return report.exit_code();
}

const FieldDescriptor& field_option(const std::string& name) {
  try {
    return parse_field_name(name);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kähler differentials of presented algebras and checks of the square-zero constructions", "kahler"};
  app.require_subcommand(1);
  Settings s;
  app.add_flag("--json", s.json, "JSON output on stdout");
  app.add_flag("--no-timing", s.no_timing, "report elapsed_ms as 0");
  app.add_option("--seed", s.seed, "seed for randomized checks");
  app.add_option("--budget", s.budget, "Groebner step budget");
  app.add_option("--cap", s.cap, "largest algebra or module dimension to enumerate");
  app.fallthrough();

  auto with_file = [&](CLI::App* sub) { sub->add_option("--file", s.file, "presentation file"); };

  auto* omega = app.add_subcommand("omega", "summarize Omega of a presented algebra");
  with_file(omega);
  omega->add_option("--base", s.base, "field or degree0")->check(CLI::IsMember({"field", "degree0"}));

  std::string element;
  auto* dzero = app.add_subcommand("d-zero", "test whether d(element) vanishes in Omega");
  with_file(dzero);
  dzero->add_option("element", element, "polynomial representative")->required();

  long degree = 1;
  auto* kernel = app.add_subcommand("kernel-degree", "basis of the kernel of d in one degree");
  with_file(kernel);
  kernel->add_option("--deg", degree, "degree")->required()->check(CLI::PositiveNumber);

  long max_degree = 6;
  auto* veronese = app.add_subcommand("veronese", "kernel of d vanishes outside degrees divisible by p");
  with_file(veronese);
  veronese->add_option("--max-deg", max_degree, "largest degree checked")->check(CLI::PositiveNumber);

  std::string map_file;
  auto* map_omega = app.add_subcommand("map-omega", "test whether an algebra map induces zero on Omega");
  map_omega->add_option("--map", map_file, "map file")->required();

  auto* dim = app.add_subcommand("dim", "dimension of a presented algebra");
  with_file(dim);

  bool dump = false;
  auto* parse_check = app.add_subcommand("parse-check", "parse a presentation file");
  with_file(parse_check);
  parse_check->add_flag("--dump", dump, "print the presentation in canonical form");

  auto* verify = app.add_subcommand("verify", "run a construction and check its claims");
  verify->require_subcommand(1);
  verify->fallthrough();
  std::string field_name = "QQ";
  int n = 5;
  bool allow_char_p = false;
  auto* prep = verify->add_subcommand("preparatory", "B(n) and its square-zero element f");
  prep->add_option("--n", n, "n >= 5");
  prep->add_option("--field", field_name, "QQ, Fp:<p> or FpX:<p>");
  prep->add_flag("--allow-char-p", allow_char_p, "permit positive characteristic not dividing 2n(n-4)");

  auto* killing = verify->add_subcommand("killing", "kill the differential of one element");
  with_file(killing);
  std::string kill_element;
  killing->add_option("--element", kill_element, "element to kill (default: the first variable)");

  int steps = 1;
  std::string start = "dual";
  auto* gabber = verify->add_subcommand("gabber", "iterate killing all differentials");
  gabber->add_option("--steps", steps, "number of steps");
  gabber->add_option("--start", start, "dual (k[Z]/(Z^2)) or b5")->check(CLI::IsMember({"dual", "b5"}));
  gabber->add_option("--field", field_name, "coefficient field");

  std::uint32_t p = 2;
  int n_max = 3;
  auto* charp = verify->add_subcommand("charp-tower", "F_p[Y]/(Y^(p^n)) with Y -> Y^p");
  charp->add_option("--p", p, "prime");
  charp->add_option("--n-max", n_max, "largest n");

  std::size_t pairs = 50;
  auto* twisted = verify->add_subcommand("twisted", "L[U,Z]/(U^(p^n) - x - Z, Z^2) over F_p(x)");
  twisted->add_option("--p", p, "prime");
  twisted->add_option("--n", n, "n >= 1");
  twisted->add_option("--pairs", pairs, "random pairs for the multiplicativity check");

  std::size_t count = 20;
  std::vector<std::string> extra_files;
  auto* local = verify->add_subcommand("local-case", "Omega = 0 implies dim 1 on Artinian local algebras");
  local->add_option("--count", count, "random presentations");
  local->add_option("--file", extra_files, "additional presentation files");

  std::size_t trials = 100;
  auto* euler = verify->add_subcommand("euler", "Euler identity and the deg(f) f = 0 replay");
  euler->add_option("--trials", trials, "random polynomials");
  euler->add_option("--field", field_name, "coefficient field");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  // Twisted uses --n with its own default.
  if (twisted->parsed() && twisted->count("--n") == 0) n = 1;

  try {
    if (omega->parsed()) {
      AlgebraPtr a = load_algebra(s);
      KaehlerModule om(a, s.base_kind(), s.algebra().groebner);
      auto d = om.dimension(s.cap);
      Json j{{"verb", "omega"},
             {"file", s.file},
             {"base", s.base},
             {"generators", Json::array()},
             {"relation_rows", om.relations().size()},
             {"basis_size", om.basis().size()},
             {"dimension", d ? Json(*d) : Json("infinite")},
             {"is_omega_zero", om.is_omega_zero()}};
      std::ostringstream t;
      t << "Omega_{R/" << (s.base_kind() == BaseKind::DegreeZero ? "R_0" : "k") << "}: generators";
      for (const auto& name : a->ring()->names()) {
        j["generators"].push_back("d" + name);
        t << " d" << name;
      }
      t << "\nrelation rows: " << om.relations().size() << "\nmodule basis size: " << om.basis().size()
        << "\ndim_k Omega: " << (d ? std::to_string(*d) : "infinite")
        << "\nis_omega_zero = " << (om.is_omega_zero() ? "true" : "false") << '\n';
      emit(out, s, j, t.str());
      return 0;
    }
    if (dzero->parsed()) {
      AlgebraPtr a = load_algebra(s);
      KaehlerModule om(a, s.base_kind(), s.algebra().groebner);
      Polynomial f = parse_element(element, a->ring(), "element");
      ModuleVector d = om.d_image(f);
      Json j{{"verb", "d-zero"}, {"element", f.to_string()}, {"d", vector_text(d)}, {"is_d_zero", d.is_zero()}};
      emit(out, s, j,
           "d(" + f.to_string() + ") = " + vector_text(d) + "\nis_d_zero = " + (d.is_zero() ? "true" : "false") + "\n");
      return 0;
    }
    if (kernel->parsed()) {
      AlgebraPtr a = load_algebra(s);
      KaehlerModule om(a, s.base_kind(), s.algebra().groebner);
      auto basis = derivation_kernel_in_degree(om, degree);
      Json j{{"verb", "kernel-degree"}, {"degree", degree}, {"dimension", basis.size()}, {"basis", Json::array()}};
      std::ostringstream t;
      t << "kernel of d in degree " << degree << ": dimension " << basis.size() << '\n';
      for (const auto& b : basis) {
        j["basis"].push_back(b.to_string());
        t << "  " << b.to_string() << '\n';
      }
      emit(out, s, j, t.str());
      return 0;
    }
    if (veronese->parsed()) {
      AlgebraPtr a = load_algebra(s);
      KaehlerModule om(a, s.base_kind(), s.algebra().groebner);
      VeroneseCheck check = veronese_containment_check(om, max_degree);
      Json dims = Json::array();
      std::ostringstream t;
      t << "characteristic " << a->field().characteristic() << ", degrees 1.." << max_degree << '\n';
      for (auto [d, k] : check.kernel_dimensions) {
        dims.push_back(Json{{"degree", d}, {"kernel_dimension", k}});
        t << "  degree " << d << ": kernel dimension " << k << '\n';
      }
      t << (check.pass ? "pass" : "FAIL") << '\n';
      Json j{{"verb", "veronese"},
             {"characteristic", a->field().characteristic()},
             {"max_degree", max_degree},
             {"kernel_dimensions", std::move(dims)},
             {"violations", check.violations},
             {"pass", check.pass}};
      emit(out, s, j, t.str());
      return check.pass ? 0 : 1;
    }
    if (map_omega->parsed()) {
      AlgebraMap phi = load_map(map_file, s);
      KaehlerModule source(phi.source(), s.base_kind(), s.algebra().groebner);
      KaehlerModule target(phi.target(), s.base_kind(), s.algebra().groebner);
      bool zero = is_zero_induced_map(phi, source, target);
      Json images = Json::array();
      std::ostringstream t;
      auto d_images = induced_map_on_omega(phi, target);
      for (std::size_t i = 0; i < d_images.size(); ++i) {
        const std::string& name = phi.source()->ring()->names()[i];
        images.push_back(Json{{"generator", "d" + name}, {"image", vector_text(d_images[i])}});
        t << "d" << name << " -> " << vector_text(d_images[i]) << '\n';
      }
      t << "zero_map = " << (zero ? "true" : "false") << '\n';
      emit(out, s, Json{{"verb", "map-omega"}, {"images", std::move(images)}, {"zero_map", zero}}, t.str());
      return 0;
    }
    if (dim->parsed()) {
      AlgebraPtr a = load_algebra(s);
      Json j{{"verb", "dim"},
             {"dimension", a->is_finite() ? Json(a->dim()) : Json(a->dimension().to_string())}};
      std::string t = "dim = " + a->dimension().to_string();
      if (a->truncation_order()) {
        j["truncation_order"] = *a->truncation_order();
        t += " (m-adic truncation order " + std::to_string(*a->truncation_order()) + ")";
      }
      emit(out, s, j, t + "\n");
      return 0;
    }
    if (parse_check->parsed()) {
      Presentation pres = load_presentation(s.file);
      std::string text = format_presentation(pres);
      Json j{{"verb", "parse-check"},
             {"ok", true},
             {"variables", pres.ring->nvars()},
             {"relations", pres.relations.size()}};
      if (dump) j["dump"] = text;
      emit(out, s, j,
           dump ? text
                : "ok: " + std::to_string(pres.ring->nvars()) + " variables, " +
                      std::to_string(pres.relations.size()) + " relations\n");
      return 0;
    }

    ConstructionOptions options = s.construction();
    options.allow_positive_characteristic = allow_char_p;
    if (prep->parsed()) return emit_report(out, s, verify_preparatory(n, field_option(field_name), options));
    if (killing->parsed()) {
      AlgebraPtr a;
      Polynomial r(nullptr);
      if (s.file.empty()) {
        RingPtr ring = PolyRing::make(FieldDescriptor::rationals(), {"Z"});
        a = make_quotient(Presentation{ring, {ring->variable(0).pow(2)}}, options.algebra);
      } else {
        a = load_algebra(s);
      }
      if (!kill_element.empty())
        r = parse_element(kill_element, a->ring(), "--element");
      else if (a->ring()->nvars() > 0)
        r = a->ring()->variable(0);
      else
        throw InputError("the algebra has no variables; pass --element");
      KillingStep step = killing_step(a, r, options);
      return emit_report(out, s, step.report);
    }
    if (gabber->parsed())
      return emit_report(
          out, s,
          gabber_sequence(steps, start == "b5" ? SequenceSeed::Preparatory : SequenceSeed::DualNumbers,
                          field_option(field_name), options));
    if (charp->parsed()) return emit_report(out, s, charp_tower(p, n_max, options));
    if (twisted->parsed()) return emit_report(out, s, twisted_example(p, n, s.seed, pairs, options));
    if (local->parsed()) {
      std::vector<CorpusEntry> corpus = named_local_examples();
      for (const auto& path : extra_files) corpus.push_back({path, load_presentation(path), false});
      auto random = random_local_corpus(count, s.seed);
      corpus.insert(corpus.end(), random.begin(), random.end());
      VerificationReport report = check_theorem_local_case(corpus, options);
      report.params()["seed"] = s.seed;
      return emit_report(out, s, report);
    }
    if (euler->parsed()) return emit_report(out, s, verify_euler(trials, field_option(field_name), s.seed, options));
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no verb\n";
  return 2;
}

}  // namespace kahler::cli
