#include "knotkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "knotkit/certificate.hpp"
#include "knotkit/errors.hpp"
#include "knotkit/finite_quotient.hpp"
#include "knotkit/fox.hpp"
#include "knotkit/front.hpp"
#include "knotkit/kauffman.hpp"

namespace knotkit {

namespace {

class FileError : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write " + path);
  out << text;
}

// Ordered key/value lines. Human mode pads the keys, machine mode prints
// "key: value".
class Report {
 public:
  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }

  void print(std::ostream& out, bool machine) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      if (machine)
        out << k << ": " << v << '\n';
      else
        out << k << std::string(width + 2 - k.size(), ' ') << v << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string one_line(const std::string& file_text) {
  std::string out;
  std::istringstream in(file_text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    if (!out.empty()) out += "; ";
    out += line;
  }
  return out;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

FrontWord load_front(const std::string& path) {
  FrontWord f = parse_front(read_file(path));
  require_valid(f);
  return f;
}

std::string polynomial_string(const IntLaurent& p) { return p.is_zero() ? "0" : to_string(normalize_unit(p)); }

struct Options {
  bool machine = false;
  std::string map;
  bool allow_inversion = true;
  std::size_t budget_crossings = KauffmanOptions{}.max_crossings;
  std::uint64_t budget_homs = kDefaultHomBudget;
  unsigned threads = 1;
  bool unoriented = false;
  std::vector<std::string> certs;
  std::string out_front, out_cert, out_dir;
  int copies = 2;
};

int cmd_alexander(const std::string& path, const Options& o, std::ostream& out) {
  const PresentationFile file = parse_presentation_file(read_file(path));
  const Presentation& p = file.presentation;
  Report r;
  r.add("presentation", path);
  r.add("generators", static_cast<long long>(p.generator_count()));
  r.add("relators", static_cast<long long>(p.relators().size()));
  r.add("H1", to_string(h1(p)));
  AbelianizationMap m;
  std::string source;
  if (o.map.empty()) {
    m = z_surjection(p);
    source = "automatic";
  } else if (o.map == "file") {
    if (file.maps.empty()) throw ValidationError(path + " has no map line");
    m = file.maps.front();
    source = "file";
  } else {
    std::string text = o.map;
    std::replace(text.begin(), text.end(), ',', ' ');
    m = parse_map(p, text);
    source = "option";
  }
  const AlexanderMatrix a = alexander_matrix(p, m);
  r.add("map", format_map(p, m));
  r.add("map_source", source);
  r.add("alexander_matrix", one_line(to_string(a)));
  r.add("alexander_polynomial", polynomial_string(alexander_polynomial(a)));
  r.print(out, o.machine);
  return kExitOk;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, const Options& o, std::ostream& out) {
  Report r;
  std::vector<IntLaurent> polys;
  for (const auto* path : {&a_path, &b_path}) {
    const Presentation p = parse_presentation_file(read_file(*path)).presentation;
    const AbelianGroup g = h1(p);
    if (g.free_rank != 1)
      throw ValidationError(*path + ": H1 = " + to_string(g) + " has free rank " + std::to_string(g.free_rank) +
                            ", comparison needs free rank 1");
    const AbelianizationMap m = z_surjection(p);
    polys.push_back(alexander_polynomial(p, m));
    const std::string tag = polys.size() == 1 ? "a" : "b";
    r.add(tag + "_presentation", *path);
    r.add(tag + "_map", format_map(p, m));
    r.add(tag + "_alexander_polynomial", polynomial_string(polys.back()));
  }
  r.add("equivalence", o.allow_inversion ? "units and t -> 1/t" : "units");
  r.add("verdict", unit_equivalent(polys[0], polys[1], o.allow_inversion) ? "INDISTINGUISHABLE" : "DISTINCT");
  r.print(out, o.machine);
  return kExitOk;
}

IntMatrix parse_integer_rows(const std::string& text) {
  std::vector<std::vector<Coeff>> rows;
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::vector<Coeff> row;
    for (std::string tok; ls >> tok;) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("matrix line " + std::to_string(line_no) + ": bad entry '" + tok + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix line " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

int cmd_snf(const std::string& path, const Options& o, std::ostream& out) {
  const std::string text = read_file(path);
  Report r;
  IntMatrix m;
  std::optional<Presentation> p;
  if (text.find("gens:") != std::string::npos) {
    p = parse_presentation_file(text).presentation;
    m = exponent_matrix(*p);
    r.add("input", "exponent matrix of " + path);
  } else {
    m = parse_integer_rows(text);
    r.add("input", path);
  }
  const SmithForm s = smith_normal_form(m);
  r.add("size", std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  std::string diagonal;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    diagonal += (i ? " " : "") + std::to_string(s.diagonal(i, i));
  std::string factors;
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i)
    factors += (i ? " " : "") + std::to_string(s.invariant_factors[i]);
  r.add("diagonal", diagonal.empty() ? "(none)" : diagonal);
  r.add("invariant_factors", factors.empty() ? "(none)" : factors);
  r.add("rank", static_cast<long long>(s.rank()));
  if (p) r.add("H1", to_string(h1(*p)));
  r.print(out, o.machine);
  return kExitOk;
}

int cmd_tb(const std::string& path, const Options& o, std::ostream& out) {
  const FrontWord f = load_front(path);
  const OrientedFront of = orient(f);
  Report r;
  r.add("front", path);
  r.add("events", static_cast<long long>(f.events.size()));
  r.add("components", components(f));
  r.add("writhe", writhe(of));
  r.add("right_cusps", right_cusps(f));
  r.add("tb", thurston_bennequin(of));
  r.add("rot", join(rotation(of), " "));
  r.print(out, o.machine);
  return kExitOk;
}

void add_filling(Report& r, const FillingReport& rep) {
  r.add("verdict", rep.accepted ? "ACCEPT" : "REJECT");
  r.add("pinches", rep.pinches);
  r.add("deaths", rep.deaths);
  r.add("euler_characteristic", rep.euler);
  if (rep.genus) r.add("genus", *rep.genus);
  if (rep.tb) r.add("tb", *rep.tb);
  r.add("tb_check", rep.tb_consistent ? "tb + chi = 0" : "tb + chi != 0");
  if (rep.failed_step) r.add("failed_step", static_cast<long long>(*rep.failed_step));
  r.add("message", rep.message);
}

int cmd_check_filling(const std::string& front_path, const std::string& cert_path, const Options& o,
                      std::ostream& out) {
  const FrontWord f = load_front(front_path);
  const FillingCertificate c = parse_certificate(read_file(cert_path));
  const FillingReport rep = check_certificate(f, c, CheckOptions{!o.unoriented});
  Report r;
  r.add("front", front_path);
  r.add("certificate", cert_path);
  r.add("steps", static_cast<long long>(c.steps.size()));
  add_filling(r, rep);
  r.print(out, o.machine);
  return rep.accepted ? kExitOk : kExitVerification;
}

int cmd_connect(const std::vector<std::string>& fronts, const Options& o, std::ostream& out) {
  if (fronts.empty()) throw ValidationError("connect needs at least one front");
  if (!o.certs.empty() && o.certs.size() != fronts.size())
    throw ValidationError("connect got " + std::to_string(fronts.size()) + " fronts but " +
                          std::to_string(o.certs.size()) + " certificates");
  FrontWord sum = load_front(fronts[0]);
  std::optional<FillingCertificate> cert;
  if (!o.certs.empty()) cert = parse_certificate(read_file(o.certs[0]));
  for (std::size_t i = 1; i < fronts.size(); ++i) {
    const FrontWord next = load_front(fronts[i]);
    if (cert) cert = compose_certificates(sum, *cert, next, parse_certificate(read_file(o.certs[i])));
    sum = connected_sum(sum, next);
  }
  Report r;
  r.add("summands", static_cast<long long>(fronts.size()));
  r.add("events", static_cast<long long>(sum.events.size()));
  r.add("tb", thurston_bennequin(sum));
  r.add("rot", join(rotation(orient(sum)), " "));
  if (o.out_front.empty())
    r.add("front", one_line(format_front(sum)));
  else {
    write_file(o.out_front, format_front(sum));
    r.add("front_file", o.out_front);
  }
  int code = kExitOk;
  if (cert) {
    if (o.out_cert.empty())
      r.add("certificate", one_line(format_certificate(*cert)));
    else {
      write_file(o.out_cert, format_certificate(*cert));
      r.add("certificate_file", o.out_cert);
    }
    const FillingReport rep = check_certificate(sum, *cert, CheckOptions{!o.unoriented});
    add_filling(r, rep);
    if (!rep.accepted) code = kExitVerification;
  }
  r.print(out, o.machine);
  return code;
}

int cmd_family(const std::string& front_path, const Options& o, std::ostream& out) {
  if (o.certs.empty()) throw ValidationError("family needs --certs");
  const FrontWord f = load_front(front_path);
  std::vector<FillingCertificate> certs;
  for (const auto& c : o.certs) certs.push_back(parse_certificate(read_file(c)));
  const FrontWord sum = iterated_sum(f, o.copies);
  const auto family = certificate_family(f, certs, o.copies);
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    write_file(o.out_dir + "/sum.front", format_front(sum));
  }
  Report r;
  r.add("copies", o.copies);
  r.add("tb", thurston_bennequin(sum));
  r.add("members", static_cast<long long>(family.size()));
  std::size_t accepted = 0;
  for (const FamilyMember& m : family) {
    std::vector<int> names;
    for (int c : m.choice) names.push_back(c + 1);
    const std::string id = join(names, "");
    const FillingReport rep = check_certificate(sum, m.certificate);
    if (rep.accepted) ++accepted;
    r.add("member_" + id, std::string(rep.accepted ? "ACCEPT" : "REJECT") + " chi=" + std::to_string(rep.euler) +
                              " steps=" + std::to_string(m.certificate.steps.size()));
    if (!o.out_dir.empty()) write_file(o.out_dir + "/d" + id + ".cert", format_certificate(m.certificate));
  }
  r.add("accepted", std::to_string(accepted) + "/" + std::to_string(family.size()));
  r.print(out, o.machine);
  return accepted == family.size() ? kExitOk : kExitVerification;
}

KauffmanOptions kauffman_options(const Options& o) {
  KauffmanOptions k;
  k.max_crossings = o.budget_crossings;
  k.threads = o.threads;
  return k;
}

int cmd_kauffman(const std::string& path, const Options& o, std::ostream& out) {
  const LinkDiagram d = parse_pd(read_file(path));
  KauffmanStats stats;
  const BiLaurent f = kauffman_F(d, kauffman_options(o), &stats);
  Report r;
  r.add("diagram", path);
  r.add("crossings", static_cast<long long>(crossing_count(d)));
  r.add("components", link_components(d));
  r.add("writhe", writhe(d));
  r.add("kauffman_F", to_string(f));
  if (!f.is_zero()) r.add("min_deg_a", min_deg_a(f));
  r.add("skein_nodes", static_cast<long long>(stats.nodes));
  r.add("memo_hits", static_cast<long long>(stats.memo_hits));
  r.print(out, o.machine);
  return kExitOk;
}

int cmd_tb_bound(const std::string& path, const Options& o, std::ostream& out) {
  const LinkDiagram d = parse_pd(read_file(path));
  const int bound = tb_upper_bound(d, kauffman_options(o));
  Report r;
  r.add("diagram", path);
  r.add("min_deg_a", bound + 1);
  r.add("tb_bound", bound);
  r.print(out, o.machine);
  return kExitOk;
}

int cmd_homs(const std::string& path, std::size_t n, const Options& o, std::ostream& out) {
  const Presentation p = parse_presentation_file(read_file(path)).presentation;
  const HomCount c = count_homs(p, n, o.budget_homs, o.threads);
  Report r;
  r.add("presentation", path);
  r.add("target", "S" + std::to_string(n));
  r.add("homomorphisms", static_cast<long long>(c.count));
  r.add("non_abelian_image", static_cast<long long>(c.non_abelian));
  if (c.witness) {
    std::string w;
    for (std::size_t g = 0; g < p.generator_count(); ++g)
      w += (g ? " " : "") + p.generator_names()[g] + "=" + to_cycles(c.witness->images[g]);
    r.add("witness", w);
    const bool ok = check_finite_hom(p, *c.witness) && !is_image_abelian(*c.witness);
    r.add("witness_check", ok ? "relators hold, images do not commute" : "FAILED");
    if (!ok) throw VerificationFailure("witness failed verification");
  } else {
    r.add("witness", "none");
  }
  r.print(out, o.machine);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"knotkit: Fox calculus, Legendrian fronts, filling certificates and Kauffman polynomials"};
  app.name("knotkit");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--machine", o.machine, "Print 'key: value' lines");

  std::string path, path2;
  std::vector<std::string> paths;
  std::size_t n = 0;

  auto* alexander = app.add_subcommand("alexander", "H1, Alexander matrix and polynomial of a presentation");
  alexander->add_option("presentation", path, "Presentation file")->required();
  alexander->add_option("--map", o.map, "Map to Z, e.g. x1=1,x2=-1,x3=1, or 'file' for the file's map line");

  auto* compare = app.add_subcommand("compare", "Compare two presentations by their Alexander polynomials");
  compare->add_option("a", path, "First presentation")->required();
  compare->add_option("b", path2, "Second presentation")->required();
  compare->add_option("--allow-inversion", o.allow_inversion, "Identify p(t) with p(1/t)")->default_val(true);

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix or a presentation's exponent matrix");
  snf->add_option("input", path, "Matrix file (rows of integers) or presentation")->required();

  auto* tb = app.add_subcommand("tb", "Thurston-Bennequin and rotation numbers of a front");
  tb->add_option("front", path, "Front file")->required();

  auto* check = app.add_subcommand("check-filling", "Replay a filling certificate");
  check->add_option("front", path, "Front file")->required();
  check->add_option("certificate", path2, "Certificate file")->required();
  check->add_flag("--unoriented", o.unoriented, "Allow pinches of parallel strands");

  auto* connect = app.add_subcommand("connect", "Legendrian connected sum, with composed certificates");
  connect->add_option("fronts", paths, "Front files")->required();
  connect->add_option("--certs", o.certs, "One certificate per front");
  connect->add_option("--out-front", o.out_front, "Write the summed front here");
  connect->add_option("--out-cert", o.out_cert, "Write the composed certificate here");
  connect->add_flag("--unoriented", o.unoriented, "Allow pinches of parallel strands");

  auto* family = app.add_subcommand("family", "All composed certificates for an iterated connected sum");
  family->add_option("front", path, "Front file")->required();
  family->add_option("--certs", o.certs, "Certificates of the summand")->required();
  family->add_option("-n,--copies", o.copies, "Number of summands")->default_val(2)->check(CLI::PositiveNumber);
  family->add_option("--out-dir", o.out_dir, "Write the sum and every certificate here");

  auto* kauffman = app.add_subcommand("kauffman", "Kauffman polynomial F(a, z) of a PD code");
  kauffman->add_option("pd", path, "PD file")->required();
  auto* bound = app.add_subcommand("tb-bound", "Upper bound min deg_a F - 1 on tb");
  bound->add_option("pd", path, "PD file")->required();
  for (auto* sub : {kauffman, bound}) {
    sub->add_option("--budget-crossings", o.budget_crossings, "Largest diagram accepted")->default_val(16);
    sub->add_option("--threads", o.threads, "Worker threads")->default_val(1)->check(CLI::PositiveNumber);
  }

  auto* homs = app.add_subcommand("homs", "Count homomorphisms into the symmetric group S_n");
  homs->add_option("presentation", path, "Presentation file")->required();
  homs->add_option("n", n, "Degree of the symmetric group")->required()->check(CLI::Range(1, 12));
  homs->add_option("--budget-homs", o.budget_homs, "Largest number of assignments to try")
      ->default_val(kDefaultHomBudget);
  homs->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->default_val(0);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*alexander) return cmd_alexander(path, o, out);
    if (*compare) return cmd_compare(path, path2, o, out);
    if (*snf) return cmd_snf(path, o, out);
    if (*tb) return cmd_tb(path, o, out);
    if (*check) return cmd_check_filling(path, path2, o, out);
    if (*connect) return cmd_connect(paths, o, out);
    if (*family) return cmd_family(path, o, out);
    if (*kauffman) return cmd_kauffman(path, o, out);
    if (*bound) return cmd_tb_bound(path, o, out);
    if (*homs) return cmd_homs(path, n, o, out);
  } catch (const BudgetExceeded& e) {
    err << "knotkit: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const OverflowError& e) {
    err << "knotkit: coefficient overflow: " << e.what() << '\n';
    return kExitBudget;
  } catch (const VerificationFailure& e) {
    err << "knotkit: " << e.what() << '\n';
    return kExitVerification;
  } catch (const Error& e) {
    err << "knotkit: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "knotkit: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  err << "knotkit: no command given\n";
  return kExitUsage;
}

}  // namespace knotkit
