#include "tarski/groupoid.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "tarski/error.hpp"
#include "tarski/random.hpp"

namespace tarski {

namespace {

[[noreturn]] void invalid(std::string const& what)
{
  throw Error(ErrorKind::invalid_groupoid, what);
}

template<typename Map>
std::size_t lookup(Map const& map, std::string const& key, char const* what)
{
  auto it = map.find(key);
  if (it == map.end())
    invalid(std::string("unknown ") + what + " '" + key + "'");
  return it->second;
}

} // namespace

FiniteGroupoid::FiniteGroupoid(Spec spec)
{
  std::sort(spec.objects.begin(), spec.objects.end());
  if (std::adjacent_find(spec.objects.begin(), spec.objects.end()) != spec.objects.end())
    invalid("duplicate object id");
  objects_ = spec.objects;
  std::map<std::string, std::size_t> object_index;
  for (std::size_t i = 0; i < objects_.size(); ++i)
    object_index[objects_[i]] = i;

  std::sort(spec.arrows.begin(), spec.arrows.end(),
            [](auto const& a, auto const& b) { return a.id < b.id; });
  std::map<std::string, std::size_t> arrow_index;
  for (auto const& a : spec.arrows) {
    if (arrow_index.contains(a.id))
      invalid("duplicate arrow id '" + a.id + "'");
    arrow_index[a.id] = arrows_.size();
    arrows_.push_back({a.id, lookup(object_index, a.src, "object"),
                       lookup(object_index, a.dst, "object")});
  }
  auto const n = arrows_.size();
  compose_.assign(n * n, -1);
  auto set_compose = [&](std::size_t a, std::size_t b, std::size_t c) {
    auto& slot = compose_[a * n + b];
    if (slot != -1 && static_cast<std::size_t>(slot) != c)
      invalid("conflicting composition for " + arrows_[a].id + " o " + arrows_[b].id);
    slot = static_cast<std::int32_t>(c);
  };
  for (auto const& [a, b, c] : spec.compose) {
    auto const ia = lookup(arrow_index, a, "arrow");
    auto const ib = lookup(arrow_index, b, "arrow");
    auto const ic = lookup(arrow_index, c, "arrow");
    if (arrows_[ib].dst != arrows_[ia].src)
      invalid("composition " + a + " o " + b + " listed for non-composable arrows");
    set_compose(ia, ib, ic);
  }

  identity_.assign(objects_.size(), n);
  if (!spec.identities.empty()) {
    for (auto const& [obj, id] : spec.identities) {
      auto const o = lookup(object_index, obj, "object");
      auto const a = lookup(arrow_index, id, "arrow");
      if (identity_[o] != n)
        invalid("two identities listed for object '" + obj + "'");
      identity_[o] = a;
    }
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      auto const& arr = arrows_[a];
      if (arr.src != arr.dst || compose_[a * n + a] != static_cast<std::int32_t>(a))
        continue;
      if (identity_[arr.src] != n)
        invalid("object '" + objects_[arr.src] + "' has two idempotent loops");
      identity_[arr.src] = a;
    }
  }
  for (std::size_t o = 0; o < objects_.size(); ++o)
    if (identity_[o] == n)
      invalid("no identity arrow for object '" + objects_[o] + "'");
  for (std::size_t o = 0; o < objects_.size(); ++o) {
    auto const i = identity_[o];
    if (arrows_[i].src != o || arrows_[i].dst != o)
      invalid("identity '" + arrows_[i].id + "' is not a loop at '" + objects_[o] + "'");
  }
  // identity compositions may be left implicit
  for (std::size_t a = 0; a < n; ++a) {
    set_compose(a, identity_[arrows_[a].src], a);
    set_compose(identity_[arrows_[a].dst], a, a);
  }

  inverse_.assign(n, n);
  auto set_inverse = [&](std::size_t a, std::size_t b) {
    if (inverse_[a] != n && inverse_[a] != b)
      invalid("conflicting inverse for '" + arrows_[a].id + "'");
    inverse_[a] = b;
  };
  for (auto const& [a, b] : spec.inverse) {
    auto const ia = lookup(arrow_index, a, "arrow");
    auto const ib = lookup(arrow_index, b, "arrow");
    set_inverse(ia, ib);
    set_inverse(ib, ia);
  }
  for (std::size_t o = 0; o < objects_.size(); ++o)
    set_inverse(identity_[o], identity_[o]);

  // validation
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool const composable = arrows_[b].dst == arrows_[a].src;
      auto const c = compose_[a * n + b];
      if (composable && c == -1)
        invalid("missing composition " + arrows_[a].id + " o " + arrows_[b].id);
      if (!composable)
        continue;
      auto const& ca = arrows_[static_cast<std::size_t>(c)];
      if (ca.src != arrows_[b].src || ca.dst != arrows_[a].dst)
        invalid("composition " + arrows_[a].id + " o " + arrows_[b].id + " has wrong endpoints");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (arrows_[b].dst != arrows_[a].src)
        continue;
      auto const ab = static_cast<std::size_t>(compose_[a * n + b]);
      for (std::size_t c = 0; c < n; ++c) {
        if (arrows_[c].dst != arrows_[b].src)
          continue;
        auto const bc = static_cast<std::size_t>(compose_[b * n + c]);
        if (compose_[ab * n + c] != compose_[a * n + bc])
          invalid("associativity fails on (" + arrows_[a].id + ", " + arrows_[b].id + ", "
                  + arrows_[c].id + ")");
      }
    }
  for (std::size_t a = 0; a < n; ++a) {
    auto const b = inverse_[a];
    if (b == n)
      invalid("no inverse for '" + arrows_[a].id + "'");
    if (arrows_[b].src != arrows_[a].dst || arrows_[b].dst != arrows_[a].src)
      invalid("inverse of '" + arrows_[a].id + "' has wrong endpoints");
    if (compose_[b * n + a] != static_cast<std::int32_t>(identity_[arrows_[a].src])
        || compose_[a * n + b] != static_cast<std::int32_t>(identity_[arrows_[a].dst]))
      invalid("inverse law fails for '" + arrows_[a].id + "'");
  }
}

std::optional<std::size_t> FiniteGroupoid::compose(std::size_t a, std::size_t b) const
{
  auto const c = compose_[a * arrows_.size() + b];
  if (c < 0)
    return std::nullopt;
  return static_cast<std::size_t>(c);
}

std::optional<std::size_t> FiniteGroupoid::find_arrow(std::string const& id) const
{
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](Arrow const& a, std::string const& key) { return a.id < key; });
  if (it == arrows_.end() || it->id != id)
    return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

FiniteGroupoid FiniteGroupoid::from_json(nlohmann::json const& j)
{
  Spec spec;
  try {
    spec.objects = j.at("objects").get<std::vector<std::string>>();
    for (auto const& a : j.at("arrows"))
      spec.arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<std::string>(),
                             a.at("dst").get<std::string>()});
    if (j.contains("compose"))
      for (auto const& c : j.at("compose")) {
        if (!c.is_array() || c.size() != 3)
          invalid("compose entries are [a, b, a o b]");
        spec.compose.push_back({c[0].get<std::string>(), c[1].get<std::string>(),
                                c[2].get<std::string>()});
      }
    if (j.contains("inverse"))
      for (auto const& c : j.at("inverse")) {
        if (!c.is_array() || c.size() != 2)
          invalid("inverse entries are [a, a']");
        spec.inverse.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
      }
    if (j.contains("identities"))
      for (auto const& c : j.at("identities")) {
        if (!c.is_array() || c.size() != 2)
          invalid("identity entries are [object, arrow]");
        spec.identities.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
      }
  } catch (nlohmann::json::exception const& e) {
    invalid(std::string("malformed groupoid JSON: ") + e.what());
  }
  return FiniteGroupoid(std::move(spec));
}

FiniteGroupoid FiniteGroupoid::from_file(std::string const& path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::parse_error, "cannot open groupoid file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorKind::parse_error, "groupoid file '" + path + "': " + e.what());
  }
  return from_json(j);
}

nlohmann::json FiniteGroupoid::to_json() const
{
  nlohmann::json j;
  j["objects"] = objects_;
  auto arrows = nlohmann::json::array();
  for (auto const& a : arrows_)
    arrows.push_back({{"id", a.id}, {"src", objects_[a.src]}, {"dst", objects_[a.dst]}});
  j["arrows"] = std::move(arrows);
  auto compose = nlohmann::json::array();
  auto const n = arrows_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (auto c = compose_[a * n + b]; c >= 0)
        compose.push_back({arrows_[a].id, arrows_[b].id, arrows_[static_cast<std::size_t>(c)].id});
  j["compose"] = std::move(compose);
  auto inverse = nlohmann::json::array();
  for (std::size_t a = 0; a < n; ++a)
    inverse.push_back({arrows_[a].id, arrows_[inverse_[a]].id});
  j["inverse"] = std::move(inverse);
  auto ids = nlohmann::json::array();
  for (std::size_t o = 0; o < objects_.size(); ++o)
    ids.push_back({objects_[o], arrows_[identity_[o]].id});
  j["identities"] = std::move(ids);
  return j;
}

namespace groupoids {

FiniteGroupoid cyclic_pair(std::size_t order, std::size_t k, std::string const& tag)
{
  if (order == 0 || k == 0)
    throw Error(ErrorKind::invalid_argument, "cyclic_pair needs positive order and size");
  FiniteGroupoid::Spec spec;
  auto obj = [&](std::size_t i) { return tag + "x" + std::to_string(i + 1); };
  auto arrow = [&](std::size_t r, std::size_t i, std::size_t j) {
    std::string id = tag;
    if (order > 1)
      id += "g" + std::to_string(r);
    if (k > 1 || order == 1)
      id += "p" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
    return id;
  };
  for (std::size_t i = 0; i < k; ++i)
    spec.objects.push_back(obj(i));
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        spec.arrows.push_back({arrow(r, i, j), obj(i), obj(j)});
  // (r, j->l) o (s, i->j) = (r+s, i->l)
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t s = 0; s < order; ++s)
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t l = 0; l < k; ++l)
            spec.compose.push_back({arrow(r, j, l), arrow(s, i, j), arrow((r + s) % order, i, l)});
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        spec.inverse.emplace_back(arrow(r, i, j), arrow((order - r) % order, j, i));
  for (std::size_t i = 0; i < k; ++i)
    spec.identities.emplace_back(obj(i), arrow(0, i, i));
  return FiniteGroupoid(std::move(spec));
}

FiniteGroupoid pair(std::size_t k)
{
  return cyclic_pair(1, k);
}

FiniteGroupoid cyclic_group(std::size_t k)
{
  return cyclic_pair(k, 1);
}

FiniteGroupoid discrete(std::size_t k)
{
  std::vector<FiniteGroupoid> parts;
  for (std::size_t i = 0; i < k; ++i)
    parts.push_back(cyclic_pair(1, 1, "c" + std::to_string(i + 1)));
  return disjoint_union(parts);
}

FiniteGroupoid disjoint_union(std::vector<FiniteGroupoid> const& parts)
{
  FiniteGroupoid::Spec spec;
  for (auto const& g : parts) {
    auto const j = g.to_json();
    for (auto const& o : j["objects"])
      spec.objects.push_back(o.get<std::string>());
    for (auto const& a : j["arrows"])
      spec.arrows.push_back({a["id"], a["src"], a["dst"]});
    for (auto const& c : j["compose"])
      spec.compose.push_back({c[0], c[1], c[2]});
    for (auto const& c : j["inverse"])
      spec.inverse.emplace_back(c[0], c[1]);
    for (auto const& c : j["identities"])
      spec.identities.emplace_back(c[0], c[1]);
  }
  return FiniteGroupoid(std::move(spec));
}

FiniteGroupoid random(std::uint64_t seed, std::size_t max_arrows)
{
  if (max_arrows == 0)
    throw Error(ErrorKind::invalid_argument, "random groupoid needs at least one arrow");
  Rng rng(seed);
  std::vector<FiniteGroupoid> parts;
  std::size_t budget = 1 + rng.below(max_arrows);
  std::size_t tag = 0;
  while (budget > 0) {
    // candidate (order, size) shapes that fit the remaining budget
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t k = 1; k * k <= budget; ++k)
      for (std::size_t order = 1; order * k * k <= budget; ++order)
        shapes.emplace_back(order, k);
    auto const [order, k] = rng.pick(shapes);
    parts.push_back(cyclic_pair(order, k, "t" + std::to_string(tag++)));
    budget -= order * k * k;
    if (rng.below(3) == 0)
      break;
  }
  auto const merged = disjoint_union(parts).to_json();

  // relabel arrows and objects so that id order carries no structure
  std::vector<std::string> arrow_ids, object_ids;
  for (auto const& a : merged["arrows"])
    arrow_ids.push_back(a["id"]);
  for (auto const& o : merged["objects"])
    object_ids.push_back(o);
  auto relabel = [&](std::vector<std::string> const& ids, char prefix) {
    std::vector<std::size_t> perm(ids.size());
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      auto num = std::to_string(perm[i]);
      if (num.size() < 2)
        num = "0" + num;
      out[ids[i]] = std::string(1, prefix) + num;
    }
    return out;
  };
  auto const amap = relabel(arrow_ids, 'a');
  auto const omap = relabel(object_ids, 'o');
  FiniteGroupoid::Spec spec;
  for (auto const& o : merged["objects"])
    spec.objects.push_back(omap.at(o));
  for (auto const& a : merged["arrows"])
    spec.arrows.push_back({amap.at(a["id"]), omap.at(a["src"]), omap.at(a["dst"])});
  for (auto const& c : merged["compose"])
    spec.compose.push_back({amap.at(c[0]), amap.at(c[1]), amap.at(c[2])});
  for (auto const& c : merged["inverse"])
    spec.inverse.emplace_back(amap.at(c[0]), amap.at(c[1]));
  // identities left out: exercised through inference from the table
  return FiniteGroupoid(std::move(spec));
}

} // namespace groupoids

} // namespace tarski
