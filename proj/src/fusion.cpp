#include "fusionkit/fusion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "fusionkit/algorithms.hpp"
#include "fusionkit/extension.hpp"
#include "fusionkit/recognize.hpp"

namespace fusionkit
{

namespace
{

// The subgroup x of h's parent, inside h viewed as a group (local indices).
Subgroup localize(FiniteGroup const &hg, Subgroup const &x)
{
  auto const &m = dynamic_cast<SubgroupModel const &>(hg.model());
  std::vector<Elem> local;
  local.reserve(x.order());
  for (Elem e : x.members())
    local.push_back(m.to_local(e));
  return Subgroup(hg, std::move(local));
}

// Images of the generators of p under conjugation by g.
std::vector<Elem> conj_images(FiniteGroup const &G, Elem g, std::vector<Elem> const &gens)
{
  std::vector<Elem> out;
  out.reserve(gens.size());
  Elem const gi = G.inv(g);
  for (Elem x : gens)
    out.push_back(G.mult(G.mult(g, x), gi));
  return out;
}

bool conj_inside(FiniteGroup const &G, Elem g, Subgroup const &p, Subgroup const &q)
{
  Elem const gi = G.inv(g);
  for (Elem x : p.gens()) {
    if (!q.contains(G.mult(G.mult(g, x), gi)))
      return false;
  }
  return true;
}

std::uint64_t u64(std::size_t n) { return static_cast<std::uint64_t>(n); }

// Elements of C_G(P) of order prime to p.
Subgroup p_prime_centralizer(FusionData const &fd, Subgroup const &P)
{
  std::vector<Elem> out;
  auto const c0 = centralizer(fd.G, P);
  for (Elem x : c0.members()) {
    if (std::gcd(fd.G.elem_order(x), static_cast<std::size_t>(fd.p)) == 1)
      out.push_back(x);
  }
  Subgroup c(fd.G, out);
  if (!c.is_closed())
    throw GroupError("p'-elements of the centralizer do not form a subgroup");
  return c;
}

Subgroup chain_normalizer(FusionData const &fd, Chain const &c)
{
  Subgroup N = Subgroup::whole(fd.G);
  for (auto const &m : c.members)
    N = normalizer(N, m);
  return N;
}

// Restriction N_G(c)/C'(top c) -> N_G(sub)/C'(top sub) is injective.
bool restriction_injective(FusionData const &fd, Subgroup const &N, Chain const &c,
                           Chain const &sub)
{
  auto const kc = p_prime_centralizer(fd, c.top());
  auto const ks = p_prime_centralizer(fd, sub.top());
  std::size_t meet = 0;
  for (Elem x : N.members())
    meet += ks.contains(x);
  return meet == kc.order();
}

std::string chain_label(std::vector<std::string> const &names)
{
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i)
    s += (i ? "<" : "") + names[i];
  return s;
}

}  // namespace

Subgroup sylow_subgroup(FiniteGroup const &g, int p)
{
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p)
    target *= p;
  Subgroup P = Subgroup::trivial(g);
  while (P.order() < target) {
    auto N = normalizer(g, P);
    std::optional<Elem> pick;
    for (Elem x : N.members()) {
      if (!P.contains(x) && P.contains(g.pow(x, p))) {
        pick = x;
        break;
      }
    }
    if (!pick)
      throw GroupError("Sylow construction failed");
    auto gens = P.gens();
    gens.push_back(*pick);
    P = generate(g, gens);
  }
  return P;
}

FusionData FusionData::make(FiniteGroup g, int p)
{
  FusionData fd;
  fd.S = sylow_subgroup(g, p);
  fd.G = std::move(g);
  fd.p = p;
  if ((fd.G.order() / fd.S.order()) % p == 0 || !is_p_group(fd.S, p))
    throw GroupError("chosen subgroup is not a Sylow p-subgroup");
  return fd;
}

std::vector<GroupMap> hom_f(FusionData const &fd, Subgroup const &p, Subgroup const &q)
{
  std::vector<GroupMap> out;
  if (p.order() > q.order())
    return out;
  auto const &G = fd.G;
  auto pg = p.as_group();
  auto qg = q.as_group();
  auto const &qm = dynamic_cast<SubgroupModel const &>(qg.model());
  std::set<std::vector<Elem>> seen;
  for (Elem g = 0; g < G.order(); ++g) {
    if (!conj_inside(G, g, p, q))
      continue;
    if (!seen.insert(conj_images(G, g, p.gens())).second)
      continue;
    std::vector<Elem> img;
    img.reserve(p.order());
    Elem const gi = G.inv(g);
    for (Elem x : p.members())
      img.push_back(qm.to_local(G.mult(G.mult(g, x), gi)));
    out.emplace_back(pg, qg, std::move(img));
  }
  return out;
}

bool is_f_centric(FusionData const &fd, Subgroup const &p)
{
  auto const &G = fd.G;
  std::set<std::vector<Elem>> done;
  for (Elem g = 0; g < G.order(); ++g) {
    if (!conj_inside(G, g, p, fd.S))
      continue;
    auto pc = conjugate(g, p);
    if (!done.insert(pc.members()).second)
      continue;
    if (!pc.contains(centralizer(fd.S, pc)))
      return false;
  }
  return true;
}

bool is_f_radical(FusionData const &fd, Subgroup const &p)
{
  auto const &G = fd.G;
  auto N = normalizer(G, p);
  auto C = centralizer(G, p);
  Subgroup PC(G, product_set(p, C));
  auto ng = N.as_group();
  auto q = quotient(ng, localize(ng, PC));
  auto const &Q = q.group;
  auto whole = Subgroup::whole(Q);
  for (Elem y = 1; y < Q.order(); ++y) {
    if (!is_power_of(Q.elem_order(y), fd.p))
      continue;
    if (is_p_group(normal_closure(whole, {y}), fd.p))
      return false;
  }
  return true;
}

std::vector<Subgroup> subgroups_of_p_group(Subgroup const &s, int p)
{
  auto const &G = s.parent();
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> all{Subgroup::trivial(G)};
  seen.insert(all[0].members());
  for (std::size_t head = 0; head < all.size(); ++head) {
    Subgroup h = all[head];
    auto n = normalizer(s, h);
    for (Elem x : n.members()) {
      if (h.contains(x) || !h.contains(G.pow(x, p)))
        continue;
      auto gens = h.gens();
      gens.push_back(x);
      auto k = generate(G, gens);
      if (seen.insert(k.members()).second)
        all.push_back(k);
    }
  }
  std::sort(all.begin(), all.end(), [](Subgroup const &a, Subgroup const &b) {
    return a.order() != b.order() ? a.order() < b.order() : a < b;
  });
  return all;
}

std::vector<std::vector<Elem>> chain_key(FusionData const &fd, Chain const &c)
{
  auto const &G = fd.G;
  std::vector<std::vector<Elem>> best;
  for (Elem g = 0; g < G.order(); ++g) {
    if (!conj_inside(G, g, c.top(), fd.S))
      continue;
    std::vector<std::vector<Elem>> key;
    for (auto it = c.members.rbegin(); it != c.members.rend(); ++it)
      key.push_back(conjugate(g, *it).members());
    if (best.empty() || key < best)
      best = std::move(key);
  }
  return best;
}

Chain canonical_chain(FusionData const &fd, Chain const &c)
{
  auto key = chain_key(fd, c);
  Chain out;
  for (auto it = key.rbegin(); it != key.rend(); ++it)
    out.members.emplace_back(fd.G, *it);
  return out;
}

ChainAutReport chain_aut(FusionData const &fd, Chain const &c)
{
  auto const &G = fd.G;
  for (auto const &m : c.members) {
    if (!is_f_centric(fd, m))
      throw GroupError("chain member of order " + std::to_string(m.order()) +
                       " is not F-centric");
  }
  Subgroup N = chain_normalizer(fd, c);
  auto const &top = c.top();
  auto C = centralizer(G, top);

  std::set<std::vector<Elem>> maps;
  for (Elem g : N.members())
    maps.insert(conj_images(G, g, top.gens()));
  auto Cp = p_prime_centralizer(fd, top);

  ChainAutReport r;
  r.autF_order = u64(maps.size());
  if (N.order() / C.order() != maps.size())
    throw GroupError("Aut_F order disagrees with |N|/|C|");
  r.autL_order = u64(N.order() / Cp.order());
  r.normalizer_order = u64(N.order());
  r.center_order = u64(center(top).order());
  r.restriction_injective = restriction_injective(fd, N, c, Chain{{c.bottom()}});
  r.ses_identity = *r.autL_order == *r.center_order * *r.autF_order;

  auto ng = N.as_group();
  r.tag = recognize(quotient(ng, localize(ng, Cp)).group);
  r.autF_tag = recognize(quotient(ng, localize(ng, C)).group);
  return r;
}

bool SdPoset::has_arrow(std::size_t src, std::size_t dst) const
{
  for (auto const &a : arrows) {
    if (a.src == src && a.dst == dst)
      return true;
  }
  return false;
}

std::vector<Subgroup> centric_radical_classes(FusionData const &fd)
{
  std::set<std::vector<Elem>> keys;
  for (auto const &h : subgroups_of_p_group(fd.S, fd.p)) {
    if (!is_f_centric(fd, h) || !is_f_radical(fd, h))
      continue;
    keys.insert(chain_key(fd, Chain{{h}})[0]);
  }
  std::vector<Subgroup> out;
  for (auto const &k : keys)
    out.emplace_back(fd.G, k);
  std::sort(out.begin(), out.end(), [](Subgroup const &a, Subgroup const &b) {
    return a.order() != b.order() ? a.order() < b.order() : a < b;
  });
  return out;
}

SdPoset sd_poset(FusionData const &fd)
{
  SdPoset poset;
  if (fd.S.order() == 1)
    return poset;

  auto reps = centric_radical_classes(fd);

  // class names from structure tags, numbered when tags repeat
  std::vector<std::string> names;
  std::map<std::string, int> tag_count;
  for (auto const &r : reps)
    ++tag_count[recognize(r.as_group())];
  std::map<std::string, int> tag_seen;
  for (auto const &r : reps) {
    auto t = recognize(r.as_group());
    names.push_back(tag_count[t] > 1 ? t + "#" + std::to_string(++tag_seen[t]) : t);
  }
  std::map<std::vector<Elem>, std::size_t> rep_index;
  for (std::size_t i = 0; i < reps.size(); ++i)
    rep_index[reps[i].members()] = i;

  // every centric-radical subgroup of S
  std::vector<Subgroup> cr;
  std::vector<std::size_t> cr_class;
  for (auto const &h : subgroups_of_p_group(fd.S, fd.p)) {
    auto k = chain_key(fd, Chain{{h}})[0];
    auto it = rep_index.find(k);
    if (it == rep_index.end())
      continue;
    cr.push_back(h);
    cr_class.push_back(it->second);
  }
  auto class_of = [&](Subgroup const &h) { return rep_index.at(chain_key(fd, Chain{{h}})[0]); };

  // chains with top a class representative, grouped by canonical key
  std::map<std::vector<std::vector<Elem>>, std::size_t> found;
  std::function<void(std::vector<Subgroup> &)> extend = [&](std::vector<Subgroup> &desc) {
    Chain c;
    c.members.assign(desc.rbegin(), desc.rend());
    ++found[chain_key(fd, c)];
    for (auto const &h : cr) {
      if (h.order() < desc.back().order() && desc.back().contains(h)) {
        desc.push_back(h);
        extend(desc);
        desc.pop_back();
      }
    }
  };
  for (auto const &r : reps) {
    std::vector<Subgroup> desc{r};
    extend(desc);
  }

  std::vector<std::pair<std::vector<std::vector<Elem>>, std::size_t>> ordered(found.begin(),
                                                                              found.end());
  // by length, then member orders bottom first, then key
  auto shape = [](std::vector<std::vector<Elem>> const &key) {
    std::vector<std::size_t> s{key.size()};
    for (auto it = key.rbegin(); it != key.rend(); ++it)
      s.push_back(it->size());
    return s;
  };
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](auto const &a, auto const &b) { return shape(a.first) < shape(b.first); });
  std::map<std::vector<std::vector<Elem>>, std::size_t> node_of;
  for (auto const &[key, count] : ordered) {
    PosetNode node;
    Chain c;
    for (auto it = key.rbegin(); it != key.rend(); ++it)
      c.members.emplace_back(fd.G, *it);
    for (auto const &m : c.members)
      node.names.push_back(names[class_of(m)]);
    node.conjugates = count;
    node.aut = chain_aut(fd, c);
    node.chain = std::move(c);
    node_of[key] = poset.nodes.size();
    poset.nodes.push_back(std::move(node));
  }

  // arrows to proper subchains; flag isomorphic restriction
  for (std::size_t u = 0; u < poset.nodes.size(); ++u) {
    auto const &cu = *poset.nodes[u].chain;
    std::size_t const k = cu.length();
    std::map<std::size_t, bool> targets;
    auto const Nu = chain_normalizer(fd, cu);
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
      Chain sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i))
          sub.members.push_back(cu.members[i]);
      std::size_t const v = node_of.at(chain_key(fd, sub));

      auto const &au = poset.nodes[u].aut;
      auto const &av = poset.nodes[v].aut;
      bool const iso = au.autL_order == av.autL_order && au.autF_order == av.autF_order &&
                       restriction_injective(fd, Nu, cu, sub);
      auto [it, inserted] = targets.emplace(v, iso);
      if (!inserted)
        it->second = it->second && iso;
    }
    for (auto const &[v, iso] : targets)
      poset.arrows.push_back({u, v, iso});
  }
  return poset;
}

bool has_ei_property(SdPoset const &poset)
{
  for (auto const &a : poset.arrows) {
    if (poset.nodes[a.src].length() <= poset.nodes[a.dst].length())
      return false;
  }
  return true;
}

namespace
{

DiagramNode diagram_node(PosetNode const &n, std::size_t idx)
{
  DiagramNode d;
  d.chain = n.names;
  d.autF_order = n.aut.autF_order;
  d.autL_order = n.aut.autL_order;
  d.normalizer_order = n.aut.normalizer_order;
  d.tag = n.aut.tag;
  d.annotation = n.aut.annotation;
  d.merged_from = {idx};
  return d;
}

DecompositionDiagram renumber(std::string title, std::vector<DiagramNode> nodes,
                              std::vector<char> const &alive,
                              std::set<std::pair<std::size_t, std::size_t>> const &edges)
{
  DecompositionDiagram d;
  d.title = std::move(title);
  std::vector<std::size_t> id(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!alive[i])
      continue;
    id[i] = d.nodes.size();
    nodes[i].id = id[i];
    std::sort(nodes[i].merged_from.begin(), nodes[i].merged_from.end());
    d.nodes.push_back(std::move(nodes[i]));
  }
  for (auto const &[s, t] : edges)
    d.edges.emplace_back(id[s], id[t]);
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

}  // namespace

DecompositionDiagram poset_diagram(SdPoset const &poset, std::string title)
{
  std::vector<DiagramNode> nodes;
  for (std::size_t i = 0; i < poset.nodes.size(); ++i)
    nodes.push_back(diagram_node(poset.nodes[i], i));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto const &a : poset.arrows)
    edges.emplace(a.src, a.dst);
  std::vector<char> alive(nodes.size(), 1);
  return renumber(std::move(title), std::move(nodes), alive, edges);
}

DecompositionDiagram collapse(SdPoset const &poset, std::string title)
{
  std::size_t const n = poset.nodes.size();
  std::vector<DiagramNode> nodes;
  for (std::size_t i = 0; i < n; ++i)
    nodes.push_back(diagram_node(poset.nodes[i], i));
  std::vector<char> alive(n, 1), merged(n, 0);
  std::map<std::pair<std::size_t, std::size_t>, bool> edges;
  for (auto const &a : poset.arrows)
    edges[{a.src, a.dst}] = a.restriction_iso;

  // contract isomorphism arrows u -> v into v
  for (;;) {
    auto it = std::find_if(edges.begin(), edges.end(), [](auto const &e) { return e.second; });
    if (it == edges.end())
      break;
    auto const [u, v] = it->first;
    std::map<std::pair<std::size_t, std::size_t>, bool> next;
    for (auto const &[e, iso] : edges) {
      if (e == std::make_pair(u, v))
        continue;
      std::size_t s = e.first == u ? v : e.first;
      std::size_t t = e.second == u ? v : e.second;
      if (s == t)
        continue;
      auto [jt, inserted] = next.emplace(std::make_pair(s, t), iso);
      if (!inserted)
        jt->second = jt->second && iso;
    }
    edges = std::move(next);
    alive[u] = 0;
    merged[v] = 1;
    for (std::size_t m : nodes[u].merged_from)
      nodes[v].merged_from.push_back(m);
  }

  // drop contracted nodes whose successor set has an initial or terminal element
  auto successors = [&](std::size_t c) {
    std::set<std::size_t> out;
    std::vector<std::size_t> stack{c};
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (auto const &[e, iso] : edges) {
        if (e.first == x && alive[e.second] && out.insert(e.second).second)
          stack.push_back(e.second);
      }
    }
    return out;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < n && !changed; ++c) {
      if (!alive[c] || !merged[c])
        continue;
      auto succ = successors(c);
      if (succ.empty())
        continue;
      bool extremal = false;
      for (std::size_t x : succ) {
        auto below = successors(x);
        bool initial = true, terminal = true;
        for (std::size_t y : succ) {
          if (y == x)
            continue;
          initial = initial && below.count(y);
          terminal = terminal && successors(y).count(x);
        }
        extremal = extremal || initial || terminal;
      }
      if (!extremal)
        continue;
      std::map<std::pair<std::size_t, std::size_t>, bool> next;
      std::vector<std::size_t> preds, direct;
      for (auto const &[e, iso] : edges) {
        if (e.second == c)
          preds.push_back(e.first);
        else if (e.first == c)
          direct.push_back(e.second);
        else
          next[e] = iso;
      }
      for (std::size_t s : preds)
        for (std::size_t t : direct)
          next.emplace(std::make_pair(s, t), false);
      edges = std::move(next);
      alive[c] = 0;
      changed = true;
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> plain;
  for (auto const &[e, iso] : edges)
    plain.insert(e);
  return renumber(std::move(title), std::move(nodes), alive, plain);
}

std::string DecompositionDiagram::to_json() const
{
  using nlohmann::ordered_json;
  auto opt = [](std::optional<std::uint64_t> const &v) -> ordered_json {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  ordered_json jn = ordered_json::array();
  for (auto const &nd : nodes) {
    ordered_json j;
    j["id"] = nd.id;
    j["chain"] = nd.chain;
    j["autF_order"] = opt(nd.autF_order);
    j["autL_order"] = opt(nd.autL_order);
    j["normalizer_order"] = opt(nd.normalizer_order);
    j["tag"] = nd.tag;
    if (!nd.annotation.empty())
      j["annotation"] = nd.annotation;
    j["merged_from"] = nd.merged_from;
    jn.push_back(std::move(j));
  }
  ordered_json je = ordered_json::array();
  for (auto const &[s, t] : edges)
    je.push_back({s, t});
  ordered_json out;
  out["schema_version"] = 1;
  out["title"] = title;
  out["nodes"] = std::move(jn);
  out["edges"] = std::move(je);
  return out.dump(2) + "\n";
}

std::string DecompositionDiagram::to_dot() const
{
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (auto const &nd : nodes) {
    os << "  n" << nd.id << " [label=\"BAut_L(" << chain_label(nd.chain) << "): " << nd.tag;
    if (nd.autL_order)
      os << " (" << *nd.autL_order << ")";
    if (!nd.annotation.empty())
      os << "\\n" << nd.annotation;
    os << "\"];\n";
  }
  for (auto const &[s, t] : edges)
    os << "  n" << s << " -> n" << t << ";\n";
  os << "}\n";
  return os.str();
}

std::string DecompositionDiagram::to_text() const
{
  std::ostringstream os;
  os << title << "\n";
  for (auto const &nd : nodes) {
    os << "  [" << nd.id << "] " << chain_label(nd.chain) << ": " << nd.tag;
    if (nd.autL_order)
      os << ", |Aut_L| = " << *nd.autL_order;
    if (nd.autF_order)
      os << ", |Aut_F| = " << *nd.autF_order;
    if (nd.normalizer_order)
      os << ", |N| = " << *nd.normalizer_order;
    if (!nd.annotation.empty())
      os << " (" << nd.annotation << ")";
    os << "\n";
  }
  for (auto const &[s, t] : edges)
    os << "  " << s << " -> " << t << "\n";
  return os.str();
}

std::string fusion_report_json(FusionData const &fd, SdPoset const &poset, std::string const &title)
{
  using nlohmann::ordered_json;
  auto opt = [](std::optional<std::uint64_t> v) { return v ? ordered_json(*v) : ordered_json(); };
  ordered_json j;
  j["schema_version"] = 1;
  j["order"] = fd.G.order();
  j["prime"] = fd.p;
  j["sylow_order"] = fd.S.order();
  ordered_json cr = ordered_json::array();
  for (auto const &s : centric_radical_classes(fd))
    cr.push_back(s.order());
  j["centric_radical_orders"] = std::move(cr);
  ordered_json chains = ordered_json::array();
  for (auto const &n : poset.nodes) {
    ordered_json c;
    c["chain"] = n.names;
    c["conjugates"] = n.conjugates;
    c["autF_order"] = opt(n.aut.autF_order);
    c["autL_order"] = opt(n.aut.autL_order);
    c["center_order"] = opt(n.aut.center_order);
    c["normalizer_order"] = opt(n.aut.normalizer_order);
    c["tag"] = n.aut.tag;
    c["autF_tag"] = n.aut.autF_tag;
    c["ses_identity"] = n.aut.ses_identity;
    c["restriction_injective"] = n.aut.restriction_injective;
    chains.push_back(std::move(c));
  }
  j["chains"] = std::move(chains);
  ordered_json arrows = ordered_json::array();
  for (auto const &a : poset.arrows)
    arrows.push_back({{"src", a.src}, {"dst", a.dst}, {"restriction_iso", a.restriction_iso}});
  j["arrows"] = std::move(arrows);
  j["diagram"] = ordered_json::parse(poset_diagram(poset, title).to_json());
  j["collapsed"] = ordered_json::parse(collapse(poset, title).to_json());
  return j.dump(2) + "\n";
}

}  // namespace fusionkit
