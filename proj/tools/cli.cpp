#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "qskein/conversion.hpp"
#include "qskein/evaluation.hpp"
#include "qskein/homfly.hpp"
#include "qskein/qbasis.hpp"
#include "qskein/serialize.hpp"
#include "qskein/verify.hpp"

namespace qskein::cli {
namespace {

constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kPreconditionError = 3;
constexpr int kVerifyError = 4;

// Raised while turning command-line text into domain objects.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  int max_crossings = kDefaultCrossingCap;
  bool json() const { return format == "json"; }
};

Partition read_partition(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError("bad partition '" + text + "': " + e.what());
  }
}

SkeinElement read_element(const std::string& text) {
  try {
    return parse_skein_element(text);
  } catch (const std::invalid_argument& e) {
    throw InputError("bad element '" + text + "': " + e.what());
  }
}

std::vector<int> read_braid_word(const std::string& text) {
  std::vector<int> word;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      word.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("bad braid letter '" + tok + "'");
    }
  }
  return word;
}

struct DiagramInput {
  std::string braid;
  int strands = 2;
  std::string pd;
  std::string pd_file;

  void add_options(CLI::App& sub) {
    auto* braid_opt =
        sub.add_option("--braid", braid, "braid word, e.g. \"1 1 1\"");
    sub.add_option("--strands", strands, "strand count for --braid")
        ->capture_default_str();
    auto* pd_opt = sub.add_option(
        "--pd", pd, "diagram as JSON {\"crossings\":[{\"sign\",\"edges\"}..]}");
    auto* pd_file_opt =
        sub.add_option("--pd-file", pd_file, "file holding the diagram JSON");
    braid_opt->excludes(pd_opt)->excludes(pd_file_opt);
    pd_opt->excludes(pd_file_opt);
  }

  // Braid words go through the constructor in the compute phase so that
  // out-of-range letters surface as precondition violations, not parse
  // errors; malformed JSON stays a parse error.
  std::optional<std::vector<int>> word;
  std::optional<nlohmann::json> pd_json;

  void parse_inputs() {
    if (!pd.empty() || !pd_file.empty()) {
      std::string text = pd;
      if (!pd_file.empty()) {
        std::ifstream in(pd_file);
        if (!in) throw InputError("cannot open '" + pd_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
      }
      try {
        pd_json = nlohmann::json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad diagram JSON: ") + e.what());
      }
    } else {
      word = read_braid_word(braid);
    }
  }

  LinkDiagram build() const {
    if (pd_json) return diagram_from_json(*pd_json);
    return LinkDiagram::from_braid_word(*word, strands);
  }
};

void emit(const Common& common, std::ostream& out, const nlohmann::json& j,
          const std::string& text) {
  if (common.json())
    out << j.dump(2) << "\n";
  else
    out << text << "\n";
}

// ---- verb handlers; inputs are already domain objects ----

int do_q_expand(const Common& common, std::ostream& out, const Partition& l,
                const Partition& m) {
  const IndexVector w = index_vector(l, m);
  const TemplateMatrix mat(w);
  const SkeinElement q = mat.determinant();
  if (common.json()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : mat.to_strings()) rows.push_back(row);
    const nlohmann::json j = {{"lambda", to_json(l)},
                              {"mu", to_json(m)},
                              {"index", {{"starred", w.starred}, {"plain", w.plain}}},
                              {"matrix", rows},
                              {"element", to_json(q)}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "index: " << w.to_string() << "\n";
  out << "matrix:\n";
  for (const auto& row : mat.to_strings()) {
    out << " ";
    for (const auto& cell : row) out << " " << cell;
    out << "\n";
  }
  out << q.to_string() << "\n";
  return kOk;
}

int do_eig(const Common& common, std::ostream& out, const Partition& l,
           const Partition& m) {
  const RingElem val = eigenvalue(l, m);
  emit(common, out,
       {{"lambda", to_json(l)}, {"mu", to_json(m)}, {"eigenvalue", val.to_string()}},
       val.to_string());
  return kOk;
}

int do_mult(const Common& common, std::ostream& out, const Partition& l1,
            const Partition& m1, const Partition& l2, const Partition& m2) {
  const QExpansion prod = multiply_in_q(l1, m1, l2, m2);
  emit(common, out, to_json(prod), prod.to_string());
  return kOk;
}

int do_expand(const Common& common, std::ostream& out, const SkeinElement& x) {
  const QExpansion e = expand_in_q(x);
  emit(common, out, to_json(e), e.to_string());
  return kOk;
}

int do_eval(const Common& common, std::ostream& out, const SkeinElement& x) {
  const RingElem val = eval_element(x);
  emit(common, out, {{"value", val.to_string()}}, val.to_string());
  return kOk;
}

int do_phi_n(const Common& common, std::ostream& out, const SkeinElement& x,
             int rank) {
  const SkeinElement img = phi_n(x, rank);
  emit(common, out, to_json(img), img.to_string());
  return kOk;
}

int do_homfly(const Common& common, std::ostream& out, const DiagramInput& in) {
  const LinkDiagram d = in.build();
  const RingElem framed = framed_homfly(d, common.max_crossings);
  const RingElem p = RingElem::v(d.writhe()) * framed / RingElem::delta();
  if (common.json()) {
    const nlohmann::json j = {{"writhe", d.writhe()},
                              {"crossings", d.crossing_count()},
                              {"framed", framed.to_string()},
                              {"p", p.to_string()}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "writhe: " << d.writhe() << "\n";
  out << "framed: " << framed.to_string() << "\n";
  out << "p: " << p.to_string() << "\n";
  return kOk;
}

int do_satellite(const Common& common, std::ostream& out, const DiagramInput& in,
                 bool box_box, int parallel, int reverse) {
  const LinkDiagram d = in.build();
  if (box_box) {
    const RingElem val = k_invariant_box_box(d, common.max_crossings);
    emit(common, out, {{"k_box_box", val.to_string()}}, val.to_string());
    return kOk;
  }
  std::vector<bool> pattern;
  pattern.insert(pattern.end(), static_cast<size_t>(parallel), true);
  pattern.insert(pattern.end(), static_cast<size_t>(reverse), false);
  if (pattern.empty())
    throw std::invalid_argument("cable pattern must have at least one strand");
  const RingElem val = framed_homfly(d.cable(pattern), common.max_crossings);
  emit(common, out,
       {{"parallel", parallel}, {"reverse", reverse}, {"framed", val.to_string()}},
       val.to_string());
  return kOk;
}

int do_verify(const Common& common, std::ostream& out, const std::string& suite,
              const VerifyOptions& opts) {
  std::vector<std::string> names;
  if (suite == "all")
    names = verify_suite_names();
  else
    names.push_back(suite);
  nlohmann::json report = nlohmann::json::array();
  bool all_ok = true;
  for (const std::string& name : names) {
    const SuiteResult r = run_suite(name, opts);
    all_ok = all_ok && r.ok();
    if (common.json()) {
      report.push_back({{"suite", r.suite},
                        {"passed", r.passed},
                        {"failed", r.failed},
                        {"failures", r.failures}});
    } else {
      out << "suite " << r.suite << ": " << r.passed << " passed, " << r.failed
          << " failed\n";
      for (const std::string& f : r.failures) out << "  FAIL " << f << "\n";
    }
  }
  if (common.json()) out << report.dump(2) << "\n";
  return all_ok ? kOk : kVerifyError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact skein computations in the determinantal basis"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-crossings", common.max_crossings,
                 "largest diagram the skein recursion will accept")
      ->capture_default_str();

  std::string lambda_text = "[]", mu_text = "[]";
  std::string a_lambda_text = "[]", a_mu_text = "[]";
  std::string b_lambda_text = "[]", b_mu_text = "[]";
  std::string element_text;
  int rank = 0;
  DiagramInput diagram;
  DiagramInput sat_diagram;
  bool box_box = false;
  int parallel = 0, reverse = 0;
  std::string suite = "all";
  VerifyOptions vopts;

  CLI::App* q_expand = app.add_subcommand(
      "q-expand", "template matrix and generator expansion of a basis element");
  q_expand->add_option("--lambda", lambda_text, "plain partition, e.g. [4,2,2]")
      ->required();
  q_expand->add_option("--mu", mu_text, "starred partition")->required();

  CLI::App* eig = app.add_subcommand(
      "eig", "positive-meridian eigenvalue attached to a pair of partitions");
  eig->add_option("--lambda", lambda_text, "plain partition")
      ->capture_default_str();
  eig->add_option("--mu", mu_text, "starred partition")->capture_default_str();

  CLI::App* mult =
      app.add_subcommand("mult", "structure constants of a product of basis elements");
  mult->add_option("--a-lambda", a_lambda_text)->required();
  mult->add_option("--a-mu", a_mu_text)->required();
  mult->add_option("--b-lambda", b_lambda_text)->required();
  mult->add_option("--b-mu", b_mu_text)->required();

  CLI::App* expand =
      app.add_subcommand("expand", "coordinates of an element in the basis");
  expand->add_option("--element", element_text, "e.g. \"h1*hs1 - 1\"")->required();

  CLI::App* eval = app.add_subcommand("eval", "evaluation of an element");
  eval->add_option("--element", element_text, "e.g. \"h2*hs1\"");
  auto* eval_lambda = eval->add_option("--lambda", lambda_text,
                                       "evaluate the basis element of this pair");
  eval->add_option("--mu", mu_text, "starred partition for --lambda");

  CLI::App* phi = app.add_subcommand("phi-n", "rank-N restriction of an element");
  phi->add_option("--element", element_text)->required();
  phi->add_option("--n", rank, "rank N >= 0")->required();

  CLI::App* homfly =
      app.add_subcommand("homfly", "framed and normalized polynomial of a diagram");
  diagram.add_options(*homfly);

  CLI::App* satellite = app.add_subcommand(
      "satellite", "invariants of cables; default is the two-strand "
                   "reverse-parallel basis-element invariant");
  sat_diagram.add_options(*satellite);
  satellite->add_flag("--box-box", box_box,
                      "(<reverse parallel> - 1)/(delta^2 - 1), the default");
  satellite->add_option("--parallel", parallel, "forward strands in the cable");
  satellite->add_option("--reverse", reverse, "reversed strands in the cable");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", suite, "one of: all, ring, skein, q-basis, "
                                       "conversion, evaluation, homfly")
      ->capture_default_str();
  verify->add_option("--max", vopts.max_size, "partition size bound")
      ->capture_default_str();
  verify->add_option("--cases", vopts.cases, "randomized cases per property")
      ->capture_default_str();
  verify->add_option("--seed", vopts.seed, "random seed")->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("qskein");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    // input phase: command-line text -> domain objects
    std::optional<Partition> l, m, al, am, bl, bm;
    std::optional<SkeinElement> element;
    if (q_expand->parsed() || eig->parsed()) {
      l = read_partition(lambda_text);
      m = read_partition(mu_text);
    }
    if (mult->parsed()) {
      al = read_partition(a_lambda_text);
      am = read_partition(a_mu_text);
      bl = read_partition(b_lambda_text);
      bm = read_partition(b_mu_text);
    }
    if (expand->parsed() || phi->parsed()) element = read_element(element_text);
    if (eval->parsed()) {
      if (!element_text.empty() && *eval_lambda)
        throw InputError("give either --element or --lambda/--mu, not both");
      if (element_text.empty() && !*eval_lambda)
        throw InputError("eval needs --element or --lambda/--mu");
      if (*eval_lambda) {
        l = read_partition(lambda_text);
        m = read_partition(mu_text);
      } else {
        element = read_element(element_text);
      }
    }
    if (homfly->parsed()) diagram.parse_inputs();
    if (satellite->parsed()) {
      sat_diagram.parse_inputs();
      if (box_box && (parallel > 0 || reverse > 0))
        throw InputError("--box-box excludes --parallel/--reverse");
      if (parallel < 0 || reverse < 0)
        throw InputError("cable strand counts must be nonnegative");
      if (!box_box && parallel == 0 && reverse == 0) box_box = true;
    }
    if (verify->parsed() && suite != "all") {
      const auto& names = verify_suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end())
        throw InputError("unknown suite '" + suite + "'");
    }

    // compute phase
    try {
      if (q_expand->parsed()) return do_q_expand(common, out, *l, *m);
      if (eig->parsed()) return do_eig(common, out, *l, *m);
      if (mult->parsed()) return do_mult(common, out, *al, *am, *bl, *bm);
      if (expand->parsed()) return do_expand(common, out, *element);
      if (eval->parsed()) {
        if (element) return do_eval(common, out, *element);
        return do_eval(common, out, q_element(*l, *m));
      }
      if (phi->parsed()) return do_phi_n(common, out, *element, rank);
      if (homfly->parsed()) return do_homfly(common, out, diagram);
      if (satellite->parsed())
        return do_satellite(common, out, sat_diagram, box_box, parallel, reverse);
      if (verify->parsed()) {
        vopts.max_crossings = common.max_crossings;
        return do_verify(common, out, suite, vopts);
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kPreconditionError;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  err << "error: no command\n";
  return kParseError;
}

}  // namespace qskein::cli
