#include "fusionkit/cases.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "fusionkit/algorithms.hpp"
#include "fusionkit/extension.hpp"
#include "fusionkit/recognize.hpp"

namespace fusionkit
{

namespace
{

using u64 = std::uint64_t;

u64 ipow(u64 b, u64 e)
{
  u64 r = 1;
  while (e--)
    r *= b;
  return r;
}

u64 factorial(u64 n) { return n <= 1 ? 1 : n * factorial(n - 1); }

int mod(long a, int p) { return static_cast<int>(((a % p) + p) % p); }

std::string num(u64 n) { return std::to_string(n); }

std::string field(int p) { return "F" + std::to_string(p); }

std::string yes(bool b) { return b ? "yes" : "no"; }

// The discrete torus T_n (diagonal, p^n-torsion, determinant one) and the Weyl element.
std::vector<CycMatrix> torus_gens(int p, int level)
{
  int const m = default_conductor(p, level);
  long const step = m / static_cast<long>(ipow(p, level));
  std::vector<CycMatrix> out;
  for (int i = 0; i + 1 < p; ++i) {
    std::vector<CycNum> d(p, CycNum::one(m));
    d[i] = CycNum::root(m, step);
    d[i + 1] = CycNum::root(m, -step);
    out.push_back(CycMatrix::diagonal(d));
  }
  return out;
}

CycMatrix weyl_element(int p, int level)
{
  return std_matrix(p, StdMatrix::B, {.conductor = default_conductor(p, level), .det_one = p == 2});
}

StdOptions at(int p, int level, int k = 1)
{
  return {.k = k, .conductor = default_conductor(p, level), .det_one = p == 2};
}

Subgroup members_in(MatrixGroup const &outer, MatrixGroup const &inner)
{
  std::vector<Elem> idx;
  for (auto const &x : inner.elements())
    idx.push_back(outer.index_of(x));
  return Subgroup(outer.group(), idx);
}

// Mat2 in U(SL2(F_p)) -> (j, a) with M = d^j s_a.
std::pair<int, int> upper_coords(Mat2 const &m, int p)
{
  int const j = mod(static_cast<long>(m.b) * m.a % p * inverse_mod(2, p), p);
  return {j, m.a};
}

bool upper(Mat2 const &m) { return m.c == 0; }

// Twice the expected order, never above the configured cap.
std::size_t cap_for(CaseConfig const &cfg, u64 expected)
{
  return static_cast<std::size_t>(std::min<u64>(cfg.cap, 2 * expected));
}

}  // namespace

// ---------------------------------------------------------------------------
// configuration

std::string case_name(CaseKind kind)
{
  switch (kind) {
  case CaseKind::Up:
    return "up";
  case CaseKind::SUp:
    return "sup";
  case CaseKind::AZ:
    return "az";
  }
  return "?";
}

std::optional<CaseKind> parse_case(std::string const &name)
{
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "up")
    return CaseKind::Up;
  if (s == "sup")
    return CaseKind::SUp;
  if (s == "az")
    return CaseKind::AZ;
  return std::nullopt;
}

int az_prime(int index)
{
  switch (index) {
  case 12:
    return 3;
  case 29:
  case 31:
    return 5;
  case 34:
    return 7;
  default:
    return 0;
  }
}

int default_az_index(int p)
{
  switch (p) {
  case 3:
    return 12;
  case 5:
    return 29;
  case 7:
    return 34;
  default:
    return 0;
  }
}

void CaseConfig::validate() const
{
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw std::invalid_argument("prime must be one of 2, 3, 5, 7");
  if (level < 1)
    throw std::invalid_argument("level must be at least 1");
  if (kind == CaseKind::AZ) {
    if (p == 2)
      throw std::invalid_argument("the exotic cases need an odd prime");
    if (az_index && az_prime(*az_index) != p)
      throw std::invalid_argument("index " + std::to_string(*az_index) + " does not belong to p = " +
                                  std::to_string(p));
  } else if (az_index) {
    throw std::invalid_argument("--index applies to the az case only");
  }
}

std::string CaseConfig::describe() const
{
  std::string s = case_name(kind) + " p=" + std::to_string(p);
  if (kind == CaseKind::AZ)
    s += " i=" + std::to_string(az_index.value_or(default_az_index(p)));
  return s + " level=" + std::to_string(level);
}

// ---------------------------------------------------------------------------
// reports

std::string status_name(CheckStatus s)
{
  switch (s) {
  case CheckStatus::Pass:
    return "pass";
  case CheckStatus::Fail:
    return "fail";
  case CheckStatus::Skipped:
    return "skipped";
  }
  return "?";
}

void VerificationReport::add(std::string id, std::string anchor, bool ok, std::string witness)
{
  checks.push_back({std::move(id), std::move(anchor), ok ? CheckStatus::Pass : CheckStatus::Fail,
                    std::move(witness)});
}

void VerificationReport::skip(std::string id, std::string anchor, std::string reason)
{
  checks.push_back({std::move(id), std::move(anchor), CheckStatus::Skipped, std::move(reason)});
}

void VerificationReport::append(VerificationReport const &other)
{
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t VerificationReport::count(CheckStatus s) const
{
  return static_cast<std::size_t>(
    std::count_if(checks.begin(), checks.end(), [s](Check const &c) { return c.status == s; }));
}

Check const *VerificationReport::find(std::string const &id) const
{
  for (auto const &c : checks)
    if (c.claim_id == id)
      return &c;
  return nullptr;
}

std::string VerificationReport::to_json() const
{
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = 1;
  j["title"] = title;
  j["summary"] = {{"pass", count(CheckStatus::Pass)},
                  {"fail", count(CheckStatus::Fail)},
                  {"skipped", count(CheckStatus::Skipped)}};
  ordered_json arr = ordered_json::array();
  for (auto const &c : checks) {
    arr.push_back({{"claim_id", c.claim_id},
                   {"anchor", c.anchor},
                   {"status", status_name(c.status)},
                   {"witness", c.witness}});
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const
{
  std::ostringstream os;
  os << title << "\n";
  for (auto const &c : checks) {
    std::string st = status_name(c.status);
    std::transform(st.begin(), st.end(), st.begin(), [](unsigned char ch) { return std::toupper(ch); });
    os << "  " << st << "  " << c.claim_id << ": " << c.anchor;
    if (!c.witness.empty())
      os << " [" << c.witness << "]";
    os << "\n";
  }
  os << "  " << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, "
     << count(CheckStatus::Skipped) << " skipped\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Gamma and its automorphisms

GammaModel::GammaModel(int p_, int level_) : p(p_), level(level_)
{
  auto const opt = at(p, level);
  A = std_matrix(p, StdMatrix::A, opt);
  B = std_matrix(p, StdMatrix::B, opt);
  Z = std_matrix(p, StdMatrix::ZetaI, opt);
  group = closure({A, B}, 2 * ipow(p, 3), "Gamma");
  table = to_table(group.group(), "Gamma");
  a = group.index_of(A);
  b = group.index_of(B);
  z = group.index_of(Z);
}

std::optional<std::vector<Elem>> GammaModel::conjugation(CycMatrix const &m) const
{
  auto const mi = m.inverse();
  auto ia = group.find(m * A * mi);
  auto ib = group.find(m * B * mi);
  if (!ia || !ib)
    return std::nullopt;
  return std::vector<Elem>{*ia, *ib};
}

std::optional<Mat2> GammaModel::induced(CycMatrix const &m) const
{
  auto img = conjugation(m);
  if (!img)
    return std::nullopt;
  PlaneCoords coords(table, a, b, p);
  auto [a0, a1] = coords((*img)[0]);
  auto [b0, b1] = coords((*img)[1]);
  return Mat2{a0, b0, a1, b1};
}

Subgroup GammaAutData::preimage(LinearKind kind, Subgroup const &within) const
{
  std::vector<Elem> out;
  for (Elem f : within.members()) {
    Mat2 const &m = gl->matrix(to_gl[f]);
    int const det = mat2_det(m, p);
    bool ok = true;
    switch (kind) {
    case LinearKind::SL2:
      ok = det == 1;
      break;
    case LinearKind::GL2:
      break;
    case LinearKind::USL2:
      ok = det == 1 && upper(m);
      break;
    case LinearKind::UGL2:
      ok = upper(m);
      break;
    }
    if (ok)
      out.push_back(f);
  }
  return Subgroup(within.parent(), out);
}

std::shared_ptr<GammaAutData const> gamma_aut(int p)
{
  static std::mutex mu;
  static std::map<int, std::shared_ptr<GammaAutData const>> cache;
  if (p % 2 == 0)
    throw std::invalid_argument("Aut(Gamma) data is built for odd p");
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(p); it != cache.end())
    return it->second;

  auto const t0 = std::chrono::steady_clock::now();
  auto d = std::make_shared<GammaAutData>();
  d->p = p;
  d->xi = primitive_root(p);
  d->gamma = std::make_shared<GammaModel>(p, 1);
  auto const &gm = *d->gamma;
  auto const &g = gm.table;
  Elem const a = gm.a, b = gm.b;

  auto const D = std_matrix(p, StdMatrix::D);
  auto const sigma = std_matrix(p, StdMatrix::Sigma, {.k = d->xi});
  auto const cd = gm.conjugation(D);
  auto const cs = gm.conjugation(sigma);
  if (!cd || !cs)
    throw GroupError("D or sigma does not normalize Gamma");

  AutOptions opt;
  opt.method = AutMethod::PairScan;
  opt.seeds = {
    {a, g.conj(a, b)},
    {g.conj(b, a), b},
    {g.mult(a, b), b},
    {b, g.inv(a)},
    {g.pow(a, d->xi), b},
    *cd,
    *cs,
  };
  d->aut = std::make_unique<AutomorphismGroup>(g, std::vector<Elem>{a, b}, opt);
  d->gl = std::make_unique<LinearGroup>(p, LinearKind::GL2);
  PlaneCoords coords(g, a, b, p);
  d->to_gl.resize(d->aut->order());
  for (Elem f = 0; f < d->aut->order(); ++f)
    d->to_gl[f] = d->gl->index_of(induced_matrix(*d->aut, coords, f));
  d->c_d = *d->aut->find(*cd);
  d->c_sigma = *d->aut->find(*cs);
  d->phi = *d->aut->find({g.pow(a, d->xi), b});

  auto const &ag = d->aut->group();
  auto inn = d->aut->inner_subgroup();
  auto q = quotient(ag, inn);
  auto comp = find_complement(ag, inn, q, {d->c_d, d->c_sigma});
  d->complement = comp.complement;
  d->complement_candidates = comp.candidates;
  d->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  cache[p] = d;
  return d;
}

FiniteGroup gamma_semidirect(GammaAutData const &d, Subgroup const &k, std::string name)
{
  auto kg = k.as_group();
  auto const &km = dynamic_cast<SubgroupModel const &>(kg.model());
  std::vector<std::vector<Elem>> maps;
  maps.reserve(kg.order());
  for (Elem x = 0; x < kg.order(); ++x)
    maps.push_back(d.aut->full_map(km.to_parent(x)));
  return semidirect_product(d.gamma->table, kg, [&](Elem x, Elem n) { return maps[x][n]; },
                            std::move(name));
}

// ---------------------------------------------------------------------------
// suites

VerificationReport verify_gamma(CaseConfig const &cfg)
{
  cfg.validate();
  int const p = cfg.p;
  VerificationReport r;
  r.title = "gamma (" + cfg.describe() + ")";
  GammaModel gm(p, cfg.level);
  u64 const pp = static_cast<u64>(p);

  r.add("gamma.order", "|Gamma| = p^3", gm.group.order() == pp * pp * pp,
        "order " + num(gm.group.order()));
  bool const comm = gm.A * gm.B * gm.A.inverse() * gm.B.inverse() == gm.Z.inverse();
  r.add("gamma.commutator", "[A, B] = z^-1 I", comm,
        p == 2 ? "with A' = iA, B' = iB" : "exact over Q(zeta_" + std::to_string(gm.A.conductor()) + ")");
  auto const z = center(gm.table);
  r.add("gamma.center", "Z(Gamma) has order p and is scalar",
        z.order() == pp && z.contains(gm.z), "order " + num(z.order()));
  auto const whole = Subgroup::whole(gm.table);
  std::size_t const ex = exponent(whole);
  if (p == 2)
    r.add("gamma.exponent", "exponent 4 for the quaternion case", ex == 4, "exponent " + num(ex));
  else
    r.add("gamma.exponent", "exponent p", ex == pp, "exponent " + num(ex));
  auto const tag = recognize(gm.table);
  r.add("gamma.recognized", p == 2 ? "Gamma is Q8" : "Gamma is extraspecial of exponent p",
        tag == (p == 2 ? "Q8" : "Extraspecial(p^3,exp p)"), tag);
  auto const rep = group_report(gm.group);
  r.add("gamma.special-unitary", "every element unitary with determinant 1",
        rep.all_unitary && rep.all_det_one, "");

  // Gamma inside the torus normalizer; the quaternion case needs 4-torsion
  auto const need = torus_normalizer_level(gm.group, p);
  int const allowed = p == 2 ? std::max(cfg.level, 2) : cfg.level;
  r.add("gamma.in-S", "Gamma lies in S_n", need && *need <= allowed,
        need ? "least level " + std::to_string(*need) + ", checked at level " + std::to_string(allowed)
             : "not monomial of the required form");

  if (p == 3) {
    int const n = std::max(cfg.level, 2);
    GammaModel g2(p, n);
    auto gens = torus_gens(p, n);
    gens.push_back(weyl_element(p, n));
    auto s = closure(gens, cap_for(cfg, 3 * ipow(3, 2 * n)), "S");
    auto gsub = members_in(s, g2.group);
    auto ns = normalizer(s.group(), gsub);
    r.add("gamma.normalizer-in-S", "|N_{S_n}(Gamma)| = p^4 at p = 3", ns.order() == 81,
          "level " + std::to_string(n) + ", |S_n| = " + num(s.order()) + ", |N| = " + num(ns.order()));
  }
  return r;
}

VerificationReport verify_tau(CaseConfig const &cfg)
{
  cfg.validate();
  int const p = cfg.p;
  VerificationReport r;
  r.title = "tau (" + cfg.describe() + ")";
  if (p == 2) {
    r.skip("tau", "tau is defined for odd p", "p = 2");
    return r;
  }
  GammaModel gm(p, cfg.level);
  auto const opt = at(p, cfg.level);
  auto const tau = std_matrix(p, StdMatrix::Tau, opt);
  int const m = tau.conductor();
  auto const I = CycMatrix::identity(p, m);

  r.add("tau.involution", "tau^2 = I", tau * tau == I);
  r.add("tau.inverts-A", "tau A tau = A^-1", tau * gm.A * tau == gm.A.inverse());
  r.add("tau.inverts-B", "tau B tau = B^-1", tau * gm.B * tau == gm.B.inverse());
  r.add("tau.trace", "trace(tau) = 1", tau.trace() == CycNum::one(m));

  std::vector<Elem> fixed;
  for (Elem x = 0; x < gm.group.order(); ++x) {
    auto const &e = gm.group.element(x);
    if (tau * e == e * tau)
      fixed.push_back(x);
  }
  auto const zc = center(gm.table);
  r.add("tau.centralizer", "Gamma meets C(tau) in the center", fixed == zc.members(),
        "|Gamma n C(tau)| = " + num(fixed.size()));

  // determinant-one representative among tau and -tau
  auto const neg = tau * CycNum::root(m, 0).operator-();
  bool const dt = tau.det().is_one();
  bool const dn = neg.det().is_one();
  bool const expect_tau = (p % 4) == 1;
  r.add("tau.su-representative", "exactly one of tau, (-I)tau has determinant 1",
        dt != dn && dt == expect_tau,
        std::string("det tau = ") + (dt ? "1" : "-1") + ", det (-I)tau = " + (dn ? "1" : "-1") +
          "; representative in SU(p): " + (dt ? "tau" : "(-I)tau") +
          " (p = " + std::to_string(p % 4) + " mod 4)");

  auto const s = std_matrix(p, StdMatrix::Sigma, {.k = p - 1, .conductor = m});
  r.add("tau.sigma", "sigma_{-1} is the determinant-one representative of tau",
        s == (dt ? tau : neg));

  auto const D = std_matrix(p, StdMatrix::D, opt);
  auto const sx = std_matrix(p, StdMatrix::Sigma, {.k = primitive_root(p), .conductor = m});
  r.add("tau.centralizes-rho", "tau commutes with D and sigma_k",
        tau * D == D * tau && tau * sx == sx * tau);
  return r;
}

VerificationReport verify_rho(CaseConfig const &cfg)
{
  cfg.validate();
  int const p = cfg.p;
  VerificationReport r;
  r.title = "rho (" + cfg.describe() + ")";
  if (p == 2) {
    r.skip("rho", "rho is defined for odd p", "p = 2");
    return r;
  }
  GammaModel gm(p, cfg.level);
  auto const opt = at(p, cfg.level);
  int const m = gm.A.conductor();
  auto const I = CycMatrix::identity(p, m);
  auto const D = std_matrix(p, StdMatrix::D, opt);
  auto const Di = D.inverse();
  std::vector<CycMatrix> sigma(p);
  for (int k = 1; k < p; ++k)
    sigma[k] = std_matrix(p, StdMatrix::Sigma, at(p, cfg.level, k));

  r.add("rho.D-order", "D^p = I", D.pow(p) == I);
  bool sd = true, sa = true, sb = true;
  for (int k = 1; k < p; ++k) {
    auto const si = sigma[k].inverse();
    sd = sd && sigma[k] * D * si == D.pow(static_cast<long>(k) * k);
    sa = sa && sigma[k] * gm.A * si == gm.A.pow(k);
    sb = sb && sigma[k] * gm.B * si == gm.B.pow(inverse_mod(k, p));
  }
  r.add("rho.sigma-D", "sigma_k D sigma_k^-1 = D^(k^2) for all k", sd);
  r.add("rho.D-A", "D A D^-1 = A", D * gm.A * Di == gm.A);
  r.add("rho.D-B", "D B D^-1 = z A^2 B", D * gm.B * Di == gm.Z * gm.A.pow(2) * gm.B);
  r.add("rho.sigma-A", "sigma_k A sigma_k^-1 = A^k for all k", sa);
  r.add("rho.sigma-B", "sigma_k B sigma_k^-1 = B^(k^-1 mod p) for all k", sb);

  long sq = 0;
  for (long i = 0; i < p; ++i)
    sq += i * i;
  bool const det_ok = D.det() == CycNum::root(m, -sq * (m / p));
  r.add("rho.D-det", "det D = z^-(sum of squares)", det_ok,
        D.det().is_one() ? "D lies in SU(p)" : "det D = " + D.det().to_string() + "; D kept literal");

  // rho on U(SL2(F_p)) as d^j s_a -> D^j sigma_a
  int const xi = primitive_root(p);
  auto image = closure({D, sigma[xi]}, cap_for(cfg, static_cast<u64>(p) * (p - 1)), "rho image");
  LinearGroup usl(p, LinearKind::USL2);
  std::vector<Elem> img(usl.group().order());
  bool induced_ok = true;
  for (Elem x = 0; x < usl.group().order(); ++x) {
    auto const &M = usl.matrix(x);
    auto [j, a] = upper_coords(M, p);
    auto const R = D.pow(j) * sigma[a];
    auto idx = image.find(R);
    if (!idx)
      throw GroupError("rho(M) outside the generated image");
    img[x] = *idx;
    auto ind = gm.induced(R);
    induced_ok = induced_ok && ind && *ind == M;
  }
  GroupMap rho(usl.group(), image.group(), img);
  bool const hom = rho.is_homomorphism();
  bool const inj = rho.is_injective();
  u64 const target = static_cast<u64>(p) * (p - 1);
  r.add("rho.homomorphism", "rho is an injective homomorphism onto a group of order p(p-1)",
        hom && inj && image.order() == target && rho.image().order() == target,
        "|image| = " + num(image.order()));
  r.add("rho.induced", "rho(M) acts on Gamma/Z by M for every upper triangular M", induced_ok);
  auto dmat = gm.induced(D);
  auto smat = gm.induced(sigma[xi]);
  r.add("rho.induced-d", "D acts on Gamma/Z by d = [[1,2],[0,1]]", dmat && *dmat == Mat2{1, 2, 0, 1},
        dmat ? mat2_string(*dmat) : "does not normalize");
  r.add("rho.induced-s", "sigma_k acts on Gamma/Z by s_k = diag(k, k^-1)",
        smat && *smat == Mat2{xi, 0, 0, inverse_mod(xi, p)},
        smat ? "k = " + std::to_string(xi) + ": " + mat2_string(*smat) : "does not normalize");

  // image normalizes S_n
  auto sgens = torus_gens(p, cfg.level);
  sgens.push_back(weyl_element(p, cfg.level));
  bool norm_s = true;
  for (auto const &h : {D, sigma[xi]}) {
    auto const hi = h.inverse();
    for (auto const &s : sgens) {
      auto lv = torus_normalizer_level(h * s * hi, p);
      norm_s = norm_s && lv && *lv <= cfg.level;
    }
  }
  r.add("rho.normalizes-S", "the image of rho normalizes Gamma and S_n", induced_ok && norm_s,
        "level " + std::to_string(cfg.level));
  return r;
}

Normalizers build_normalizers(CaseConfig const &cfg)
{
  cfg.validate();
  int const p = cfg.p;
  u64 const P = static_cast<u64>(p);
  Normalizers out;
  auto &r = out.report;
  r.title = "normalizers (" + cfg.describe() + ")";
  GammaModel gm(p, cfg.level);
  auto const opt = at(p, cfg.level);

  if (p == 2) {
    auto const F = std_matrix(2, StdMatrix::F, opt);
    auto const H = std_matrix(2, StdMatrix::H, opt);
    out.n_chain = closure({gm.A, gm.B, F}, cap_for(cfg, 16), "N(Gamma<S)");
    auto const tag = recognize(out.n_chain.group());
    r.add("normalizers.chain-order", "<Gamma, F> has order 16", out.n_chain.order() == 16,
          "order " + num(out.n_chain.order()));
    r.add("normalizers.chain-tag", "<Gamma, F> is generalized quaternion Q16", tag == "Q16", tag);
    r.add("normalizers.F-square", "F^2 = (iI)A and F^4 = -I",
          F * F == CycMatrix::scalar(2, CycNum::root(F.conductor(), F.conductor() / 4)) *
                       std_matrix(2, StdMatrix::A, {.conductor = F.conductor()}) &&
            F.pow(4) == CycMatrix::scalar(2, CycNum::root(F.conductor(), F.conductor() / 2)));
    auto gsub = members_in(out.n_chain, gm.group);
    auto ses = sesverify(out.n_chain.group(), gsub, cyclic_group(2));
    std::size_t min_order = 16;
    for (Elem x = 0; x < out.n_chain.order(); ++x)
      if (!gsub.contains(x))
        min_order = std::min(min_order, out.n_chain.group().elem_order(x));
    r.add("normalizers.chain-nonsplit", "Gamma -> <Gamma, F> -> Z/2 does not split",
          ses.is_normal && ses.quotient_iso && !ses.split && min_order == 4,
          "exhaustive search, " + num(ses.complement.candidates) +
            " candidates; least order outside Gamma " + num(min_order));

    auto full = closure({gm.A, gm.B, F, H}, cap_for(cfg, 48), "N(Gamma)");
    auto const ftag = recognize(full.group());
    r.add("normalizers.full-order", "<Gamma, F, H> has order 48", full.order() == 48,
          "order " + num(full.order()));
    r.add("normalizers.full-tag", "<Gamma, F, H> is binary octahedral O48", ftag == "O48", ftag);
    r.add("normalizers.H-action", "H A H^-1 = B and H B H^-1 = -A",
          H * std_matrix(2, StdMatrix::A, {.conductor = F.conductor()}) * H.inverse() ==
              std_matrix(2, StdMatrix::B, {.conductor = F.conductor()}) &&
            H * std_matrix(2, StdMatrix::B, {.conductor = F.conductor()}) * H.inverse() ==
              std_matrix(2, StdMatrix::A, {.conductor = F.conductor()}) *
                CycNum::root(F.conductor(), F.conductor() / 2));
    auto fsub = members_in(full, gm.group);
    auto fses = sesverify(full.group(), fsub, LinearGroup(2, LinearKind::SL2).group());
    r.add("normalizers.full-ses", "Gamma is normal in <Gamma, F, H> with quotient SL2(F2)",
          fses.is_normal && fses.quotient_iso);
    r.add("normalizers.full-split-status", "splitting of Gamma -> O48 -> SL2(F2) (search result)",
          true, std::string("split: ") + yes(fses.split) + " (exhaustive, " +
                  num(fses.complement.candidates) + " candidates)");
    bool contained = true;
    for (auto const &x : out.n_chain.elements())
      contained = contained && full.find(x).has_value();
    r.add("normalizers.index", "the chain normalizer has index p+1 in the full normalizer",
          contained && full.order() == 3 * out.n_chain.order(),
          "index " + num(full.order() / out.n_chain.order()));
    out.n_full = full.group();
    return out;
  }

  int const xi = primitive_root(p);
  auto const D = std_matrix(p, StdMatrix::D, opt);
  auto const sg = std_matrix(p, StdMatrix::Sigma, at(p, cfg.level, xi));
  out.n_chain = closure({gm.A, gm.B, gm.Z, D, sg}, cap_for(cfg, P * P * P * P * (P - 1)), "N(Gamma<S)");
  auto const &nc = out.n_chain;
  u64 const chain_order = P * P * P * P * (P - 1);
  r.add("normalizers.chain-order", "|<Gamma, rho-image>| = p^4 (p-1)", nc.order() == chain_order,
        "order " + num(nc.order()));
  auto gsub = members_in(nc, gm.group);
  LinearGroup usl(p, LinearKind::USL2);
  auto ses = sesverify(nc.group(), gsub, usl.group(), {nc.index_of(D), nc.index_of(sg)});
  r.add("normalizers.chain-normal", "Gamma is normal in the chain normalizer", ses.is_normal);
  r.add("normalizers.chain-quotient", "the quotient is isomorphic to U(SL2(F_p))", ses.quotient_iso,
        "|quotient| = " + num(ses.quotient_order));
  r.add("normalizers.chain-split", "the sequence splits with the rho-image as complement",
        ses.split && ses.complement.complement && ses.complement.complement->order() == P * (P - 1),
        ses.split ? "complement of order " + num(ses.complement.complement->order()) : "no complement");

  auto d = gamma_aut(p);
  if (!d->complement) {
    r.add("normalizers.full-complement", "Inn(Gamma) has a complement containing c_D and c_sigma",
          false, "no complement found");
    return out;
  }
  auto const ksl = d->preimage(LinearKind::SL2, *d->complement);
  out.n_full = gamma_semidirect(*d, ksl, "Gamma x| SL2");
  u64 const full_order = P * P * P * P * (P * P - 1);
  r.add("normalizers.full-order", "|Gamma x| SL2(F_p)| = p^4 (p^2-1)", out.n_full.order() == full_order,
        "order " + num(out.n_full.order()));
  std::set<Elem> images;
  for (Elem f : ksl.members())
    images.insert(d->to_gl[f]);
  r.add("normalizers.full-complement", "the complement maps isomorphically onto SL2(F_p)",
        images.size() == ksl.order() && ksl.order() == P * (P * P - 1),
        "|K| = " + num(ksl.order()) + ", " + num(d->complement_candidates) + " candidates");

  // embed the chain normalizer: Gamma -> (x, 1), D -> (1, c_D), sigma -> (1, c_sigma)
  auto kg = ksl.as_group();
  auto const &km = dynamic_cast<SubgroupModel const &>(kg.model());
  auto const gsz = static_cast<Elem>(gm.group.order());
  auto const &g1 = *d->gamma;
  std::vector<Elem> gens{nc.index_of(gm.A), nc.index_of(gm.B), nc.index_of(gm.Z), nc.index_of(D),
                         nc.index_of(sg)};
  std::vector<Elem> imgs{g1.a, g1.b, g1.z, km.to_local(d->c_d) * gsz, km.to_local(d->c_sigma) * gsz};
  auto emb = extend_homomorphism(nc.group(), gens, imgs, out.n_full);
  bool const emb_ok = emb && emb->is_injective();
  r.add("normalizers.index", "the chain normalizer embeds with index p+1",
        emb_ok && out.n_full.order() == (P + 1) * nc.order(),
        emb_ok ? "index " + num(out.n_full.order() / nc.order()) : "no embedding");
  return out;
}

VerificationReport verify_az(CaseConfig const &cfg)
{
  cfg.validate();
  VerificationReport r;
  r.title = "exotic (" + cfg.describe() + ")";
  if (cfg.kind != CaseKind::AZ) {
    r.skip("az", "exotic case checks", "not an exotic case");
    return r;
  }
  int const p = cfg.p;
  u64 const P = static_cast<u64>(p);
  auto d = gamma_aut(p);
  auto const &aut = *d->aut;
  auto const &gl = *d->gl;
  u64 const expect = P * P * P * (P - 1) * (P * P - 1);

  r.add("az.aut-order", "|Aut(Gamma)| = p^3 (p-1)(p^2-1)", aut.order() == expect,
        "pair scan found " + num(aut.enumerated()) + " of " + num(aut.candidates()) + " candidates");
  r.add("az.aut-dual", "seed closure reproduces the enumeration", aut.dual_route_agrees(),
        "closure " + num(aut.seed_closure()));
  r.add("az.aut-count", "(p-1) p^3 (p^2-1) equals the enumerated order",
        (P - 1) * (P * P * P) * (P * P - 1) == aut.order());

  GroupMap to(aut.group(), gl.group(), d->to_gl);
  bool const hom = to.is_homomorphism(2'000'000);
  auto const ker = to.kernel();
  auto const inn = aut.inner_subgroup();
  r.add("az.aut-ses", "1 -> Inn(Gamma) -> Aut(Gamma) -> GL2(F_p) -> 1",
        hom && to.image().order() == gl.group().order() && ker == inn,
        "|Inn| = " + num(inn.order()) + ", |GL2| = " + num(gl.group().order()));
  bool comp_ok = false;
  if (d->complement) {
    std::set<Elem> im;
    for (Elem f : d->complement->members())
      im.insert(d->to_gl[f]);
    comp_ok = im.size() == d->complement->order() && im.size() == gl.group().order();
  }
  r.add("az.aut-complement", "Aut(Gamma) splits over Inn(Gamma) (affine group)", comp_ok,
        d->complement ? "complement of order " + num(d->complement->order()) : "none");

  Mat2 const phi = gl.matrix(d->to_gl[d->phi]);
  r.add("az.adams", "phi: A -> A^xi, B -> B is upper triangular of determinant xi",
        upper(phi) && mat2_det(phi, p) == d->xi,
        "xi = " + std::to_string(d->xi) + ", " + mat2_string(phi));

  if (!d->complement)
    return r;
  auto const &K = *d->complement;
  auto const ku = d->preimage(LinearKind::UGL2, K);
  auto const ksl = d->preimage(LinearKind::SL2, K);
  u64 const uo = ku.order() * P * P * P;
  u64 const go = K.order() * P * P * P;
  auto const gu = gamma_semidirect(*d, ku, "Gamma x| U(GL2)");
  auto const gg = gamma_semidirect(*d, K, "Gamma x| GL2");
  r.add("az.upper-product", "|Gamma x| U(GL2(F_p))| = p^4 (p-1)^2",
        gu.order() == uo && uo == P * P * P * P * (P - 1) * (P - 1), "order " + num(gu.order()));
  r.add("az.full-product", "|Gamma x| GL2(F_p)| = p^4 (p-1)(p^2-1)",
        gg.order() == go && go == P * P * P * P * (P - 1) * (P * P - 1), "order " + num(gg.order()));
  r.add("az.full-vs-special", "|Gamma x| GL2| = (p-1) |Gamma x| SL2|",
        go == (P - 1) * ksl.order() * P * P * P);

  auto gen = generate(gl.group(), {d->to_gl[d->c_d], d->to_gl[d->c_sigma], d->to_gl[d->phi]});
  bool all_upper = true;
  for (Elem x : gen.members())
    all_upper = all_upper && upper(gl.matrix(x));
  r.add("az.upper-generation", "the images of D, sigma and phi generate U(GL2(F_p))",
        all_upper && gen.order() == P * (P - 1) * (P - 1), "order " + num(gen.order()));
  return r;
}

// ---------------------------------------------------------------------------
// decomposition diagrams

namespace
{

PosetNode encoded(std::vector<std::string> names, std::string tag, std::optional<u64> autL,
                  std::optional<u64> center, std::string annotation = {})
{
  PosetNode n;
  n.names = std::move(names);
  n.aut.tag = std::move(tag);
  n.aut.autL_order = autL;
  n.aut.normalizer_order = autL;
  n.aut.center_order = center;
  if (autL && center) {
    n.aut.autF_order = *autL / *center;
    n.aut.ses_identity = *autL == *center * *n.aut.autF_order;
  }
  n.aut.restriction_injective = true;
  n.aut.annotation = std::move(annotation);
  return n;
}

}  // namespace

Decomposition emit_decomposition(CaseConfig const &cfg)
{
  cfg.validate();
  int const p = cfg.p;
  u64 const P = static_cast<u64>(p);
  u64 const n = static_cast<u64>(cfg.level);
  bool const az = cfg.kind == CaseKind::AZ;
  int const index = az ? cfg.az_index.value_or(default_az_index(p)) : 0;
  bool const w = az || p >= 5;

  u64 const torus = p == 2 ? ipow(2, n) : ipow(P, n * (P - 1));
  u64 const g4 = P * P * P * P;
  std::string const fp = field(p);
  std::string const central = cfg.kind == CaseKind::Up ? "x S^1 central factor" : "";

  std::string gamma_tag, chain_tag;
  std::optional<u64> gamma_order, chain_order;
  if (az) {
    gamma_tag = "Gamma x| GL2(" + fp + ")";
    chain_tag = "Gamma x| U(GL2(" + fp + "))";
    gamma_order = g4 * (P - 1) * (P * P - 1);
    chain_order = g4 * (P - 1) * (P - 1);
  } else if (p == 2) {
    bool const up = cfg.kind == CaseKind::Up;
    gamma_tag = up ? "Gamma.Sigma3 (non-split)" : "O48";
    chain_tag = up ? "Gamma.Sigma2 (non-split)" : "Q16";
    gamma_order = 48;
    chain_order = 16;
  } else {
    gamma_tag = "Gamma x| SL2(" + fp + ")";
    chain_tag = "Gamma x| U(SL2(" + fp + "))";
    gamma_order = g4 * (P * P - 1);
    chain_order = g4 * (P - 1);
  }
  std::string const sigma = "Sigma" + std::to_string(p);
  std::string const gi = "G" + std::to_string(index);

  Decomposition out;
  auto &poset = out.poset;
  poset.nodes.push_back(encoded({"Gamma"}, gamma_tag, gamma_order, P, central));
  if (w) {
    std::string s_tag = az ? "T x| N_" + gi + "(C" + std::to_string(p) + ")"
                           : "T x| (C" + std::to_string(p) + " x| C" + std::to_string(p - 1) + ")";
    std::optional<u64> s_order;
    if (!az)
      s_order = torus * P * (P - 1);
    std::string t_tag = az ? "T x| " + gi : "T x| " + sigma;
    std::optional<u64> t_order;
    if (!az)
      t_order = torus * factorial(P);
    std::string const az_note = az ? gi + " symbolic, |Z(" + gi + ")| = p-1 = " + std::to_string(p - 1) +
                                       ", p_" + std::to_string(index) + " = " + std::to_string(p)
                                   : central;
    poset.nodes.push_back(encoded({"S"}, s_tag, s_order, P, az ? gi + " symbolic" : central));
    poset.nodes.push_back(encoded({"T"}, t_tag, t_order, torus, az_note));
    poset.nodes.push_back(encoded({"Gamma", "S"}, chain_tag, chain_order, P, central));
    poset.nodes.push_back(encoded({"T", "S"}, s_tag, s_order, P, az ? gi + " symbolic" : central));
    poset.arrows = {{3, 0, false}, {3, 1, false}, {4, 1, true}, {4, 2, false}};
  } else {
    // the S node carries the torus normalizer
    u64 const s_order = torus * factorial(P);
    poset.nodes.push_back(encoded({"S"}, "T x| " + sigma, s_order, P, central));
    poset.nodes.push_back(encoded({"Gamma", "S"}, chain_tag, chain_order, P, central));
    poset.arrows = {{2, 0, false}, {2, 1, false}};
  }
  std::string const title = (cfg.kind == CaseKind::Up    ? "U(" + std::to_string(p) + ")"
                             : cfg.kind == CaseKind::SUp ? "SU(" + std::to_string(p) + ")"
                                                         : "X_" + std::to_string(index)) +
                            " at p = " + std::to_string(p) + ", level " + std::to_string(cfg.level);
  out.full = poset_diagram(poset, title + " (chain poset)");
  out.diagram = collapse(poset, title);
  return out;
}

namespace
{

VerificationReport decomposition_checks(CaseConfig const &cfg, std::optional<u64> gamma_node,
                                        std::optional<u64> chain_node)
{
  VerificationReport r;
  r.title = "decomposition (" + cfg.describe() + ")";
  int const p = cfg.p;
  u64 const P = static_cast<u64>(p);
  auto dec = emit_decomposition(cfg);
  bool const w = cfg.kind == CaseKind::AZ || p >= 5;
  std::size_t const classes = w ? 5 : 3;
  r.add("decomposition.classes", w ? "five chain classes" : "three chain classes",
        dec.poset.nodes.size() == classes, num(dec.poset.nodes.size()) + " classes");
  r.add("decomposition.ei", "arrows strictly shorten chains", has_ei_property(dec.poset));

  auto const &dg = dec.diagram;
  bool shape = dg.nodes.size() == 3 && dg.edges.size() == 2;
  std::optional<std::size_t> corner;
  if (shape) {
    for (std::size_t i = 0; i < 3; ++i) {
      std::size_t outdeg = 0, indeg = 0;
      for (auto const &[s, t] : dg.edges) {
        outdeg += s == i;
        indeg += t == i;
      }
      if (outdeg == 2 && indeg == 0)
        corner = i;
    }
    shape = corner && dg.nodes[*corner].chain == std::vector<std::string>{"Gamma", "S"};
  }
  r.add("decomposition.pushout", "collapsed diagram is a three-node pushout shape", shape,
        num(dg.nodes.size()) + " nodes, " + num(dg.edges.size()) + " edges");

  auto node_order = [&](std::vector<std::string> const &chain) -> std::optional<u64> {
    for (auto const &nd : dec.poset.nodes)
      if (nd.names == chain)
        return nd.aut.autL_order;
    return std::nullopt;
  };
  if (gamma_node)
    r.add("decomposition.gamma-order", "Gamma node order matches the computed normalizer",
          node_order({"Gamma"}) == gamma_node, "computed " + num(*gamma_node));
  if (chain_node)
    r.add("decomposition.chain-order", "(Gamma<S) node order matches the computed normalizer",
          node_order({"Gamma", "S"}) == chain_node, "computed " + num(*chain_node));

  // decidable torus checks on the truncated models; closures only below the budget
  constexpr u64 kBudget = 20000;
  constexpr u64 kTorusBudget = 200000;
  auto tg = torus_gens(p, cfg.level);
  u64 const tn = p == 2 ? ipow(2, cfg.level) : ipow(P, static_cast<u64>(cfg.level) * (P - 1));
  bool commuting = true;
  for (std::size_t i = 0; i < tg.size(); ++i)
    for (std::size_t j = i + 1; j < tg.size(); ++j)
      commuting = commuting && tg[i] * tg[j] == tg[j] * tg[i];
  r.add("decomposition.gamma-not-torus", "Gamma is not isomorphic to T_n", commuting,
        "T_n generated by commuting diagonal matrices");
  if (cfg.kind == CaseKind::AZ)
    return r;

  auto const weyl = weyl_element(p, cfg.level);
  std::optional<u64> const s_expect = node_order({"S"});
  auto gens = tg;
  gens.push_back(weyl);
  if (p >= 3)
    gens.push_back(std_matrix(p, StdMatrix::Sigma, at(p, cfg.level, primitive_root(p))));
  std::string const s_anchor =
    p >= 5 ? "S node order matches T_n x| (C_p x| C_(p-1))" : "S node order matches T_n x| Sigma_p";
  if (s_expect && *s_expect <= kBudget) {
    auto ns = closure(gens, cap_for(cfg, *s_expect), "N(S)");
    r.add("decomposition.S-order", s_anchor, ns.order() == *s_expect,
          "|T_n| = " + num(tn) + ", computed " + num(ns.order()));
  } else {
    r.skip("decomposition.S-order", s_anchor, "above the closure budget");
  }
  if (p >= 5) {
    if (cfg.level == 1 && tn <= kTorusBudget) {
      auto torus = closure(tg, cap_for(cfg, tn), "T");
      std::size_t fixed = 0;
      for (auto const &x : torus.elements())
        fixed += x * weyl == weyl * x;
      r.add("decomposition.torus-centralizer", "T_1 n C(B) is the scalar subgroup of order p",
            torus.order() == tn && fixed == P, num(fixed) + " of " + num(torus.order()) + " elements");
    } else {
      r.skip("decomposition.torus-centralizer", "T_1 n C(B) is the scalar subgroup of order p",
             "level " + std::to_string(cfg.level));
    }
  }
  return r;
}

}  // namespace

VerificationReport verify_decomposition(CaseConfig const &cfg)
{
  cfg.validate();
  return decomposition_checks(cfg, std::nullopt, std::nullopt);
}

VerificationReport verify_case(CaseConfig const &cfg)
{
  cfg.validate();
  VerificationReport r;
  r.title = cfg.describe();
  r.append(verify_gamma(cfg));
  if (cfg.p != 2) {
    r.append(verify_tau(cfg));
    r.append(verify_rho(cfg));
  }
  auto nz = build_normalizers(cfg);
  r.append(nz.report);
  std::optional<u64> gamma_node, chain_node;
  if (cfg.kind == CaseKind::AZ) {
    r.append(verify_az(cfg));
    auto d = gamma_aut(cfg.p);
    if (d->complement) {
      u64 const g3 = d->gamma->group.order();
      gamma_node = d->complement->order() * g3;
      chain_node = d->preimage(LinearKind::UGL2, *d->complement).order() * g3;
    }
  } else {
    gamma_node = nz.n_full.order();
    chain_node = nz.n_chain.order();
  }
  r.append(decomposition_checks(cfg, gamma_node, chain_node));
  return r;
}

std::vector<CaseConfig> all_cases(int level)
{
  std::vector<CaseConfig> out;
  for (CaseKind k : {CaseKind::Up, CaseKind::SUp})
    for (int p : {2, 3, 5, 7})
      out.push_back({k, p, level, std::nullopt});
  for (int i : {12, 29, 31, 34})
    out.push_back({CaseKind::AZ, az_prime(i), level, i});
  return out;
}

}  // namespace fusionkit
