#include "maxqp/treewidth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "maxqp/errors.hpp"
#include "maxqp/oracle.hpp"

namespace maxqp {

namespace {

using Mask = std::uint64_t;

// Children lists plus a children-first order; throws unless parent links form one tree.
struct TreeShape {
    std::vector<std::vector<int>> children;
    std::vector<int> postorder;
};

TreeShape tree_shape(const std::vector<int>& parent, int root) {
    const std::size_t count = parent.size();
    TreeShape shape;
    shape.children.resize(count);
    if (count == 0) {
        if (root != -1) throw ValidationError("decomposition: root set on an empty tree");
        return shape;
    }
    if (root < 0 || static_cast<std::size_t>(root) >= count || parent[root] != -1) {
        throw ValidationError("decomposition: invalid root");
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (static_cast<int>(i) == root) continue;
        const int p = parent[i];
        if (p < 0 || static_cast<std::size_t>(p) >= count || p == static_cast<int>(i)) {
            throw ValidationError("decomposition: bag " + std::to_string(i) + " has no valid parent");
        }
        shape.children[p].push_back(static_cast<int>(i));
    }
    // Iterative DFS; a node is emitted after all its children.
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < shape.children[node].size()) {
            const int child = shape.children[node][next++];
            stack.emplace_back(child, 0);
        } else {
            shape.postorder.push_back(node);
            stack.pop_back();
        }
    }
    if (shape.postorder.size() != count) throw ValidationError("decomposition: bags do not form a single tree");
    return shape;
}

void check_bag(const std::vector<Vertex>& bag, std::size_t index) {
    if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
        throw ValidationError("decomposition: bag " + std::to_string(index) + " is not sorted and duplicate-free");
    }
    if (!bag.empty() && bag.front() < 0) throw ValidationError("decomposition: negative vertex id");
}

// A vertex's bags are connected iff exactly one of them has a parent lacking it.
void check_traces(const std::vector<std::vector<Vertex>>& bags, const std::vector<int>& parent) {
    std::map<Vertex, int> tops;
    for (std::size_t i = 0; i < bags.size(); ++i) {
        for (Vertex v : bags[i]) {
            const int p = parent[i];
            if (p == -1 || !std::binary_search(bags[p].begin(), bags[p].end(), v)) ++tops[v];
        }
    }
    for (auto [v, count] : tops) {
        if (count != 1) throw ValidationError("decomposition: bags containing vertex " + std::to_string(v + 1) + " are not connected");
    }
}

int position(const std::vector<Vertex>& bag, Vertex v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

Mask insert_bit(Mask x, int pos, Mask bit) {
    const Mask low = x & ((Mask{1} << pos) - 1);
    return low | (bit << pos) | ((x >> pos) << (pos + 1));
}

Mask remove_bit(Mask x, int pos) {
    const Mask low = x & ((Mask{1} << pos) - 1);
    return low | ((x >> (pos + 1)) << pos);
}

double spin_of(Mask x, int pos) { return ((x >> pos) & 1) ? 1.0 : -1.0; }

struct BagEdge {
    int a;
    int b;
    double w;
};

}  // namespace

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

const char* to_string(NiceKind kind) {
    switch (kind) {
        case NiceKind::leaf: return "leaf";
        case NiceKind::introduce: return "introduce";
        case NiceKind::forget: return "forget";
        case NiceKind::join: return "join";
    }
    return "?";
}

void validate_decomposition(const WeightedGraph& g, const TreeDecomposition& td) {
    if (td.parent.size() != td.bags.size()) throw ValidationError("decomposition: parent/bag count mismatch");
    tree_shape(td.parent, td.root);
    std::vector<std::vector<int>> bags_of(g.n());
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        check_bag(td.bags[i], i);
        for (Vertex v : td.bags[i]) {
            if (static_cast<std::size_t>(v) >= g.n()) throw ValidationError("decomposition: vertex id out of range");
            bags_of[v].push_back(static_cast<int>(i));
        }
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (bags_of[v].empty()) throw ValidationError("decomposition: vertex " + std::to_string(v + 1) + " is in no bag");
    }
    check_traces(td.bags, td.parent);
    for (const auto& e : g.edges()) {
        const auto& cand = bags_of[e.u].size() <= bags_of[e.v].size() ? bags_of[e.u] : bags_of[e.v];
        const Vertex other = bags_of[e.u].size() <= bags_of[e.v].size() ? e.v : e.u;
        const bool covered = std::any_of(cand.begin(), cand.end(), [&](int b) {
            return std::binary_search(td.bags[b].begin(), td.bags[b].end(), other);
        });
        if (!covered) {
            throw ValidationError("decomposition: edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                                  "} is in no bag");
        }
    }
}

void validate_nice(const NiceTreeDecomposition& ntd) {
    const int count = static_cast<int>(ntd.nodes.size());
    if (count == 0) {
        if (ntd.root != -1) throw ValidationError("nice decomposition: root set on an empty tree");
        return;
    }
    if (ntd.root != count - 1) throw ValidationError("nice decomposition: root must be the last node");
    std::vector<int> parent_count(count, 0);
    for (int i = 0; i < count; ++i) {
        const auto& node = ntd.nodes[i];
        check_bag(node.bag, static_cast<std::size_t>(i));
        auto child = [&](int k) -> const NiceNode& {
            const int c = node.children[k];
            if (c < 0 || c >= i) throw ValidationError("nice decomposition: node " + std::to_string(i) + " child out of order");
            ++parent_count[c];
            return ntd.nodes[c];
        };
        const std::string where = "nice decomposition: " + std::string(to_string(node.kind)) + " node " + std::to_string(i);
        switch (node.kind) {
            case NiceKind::leaf:
                if (node.children[0] != -1 || node.children[1] != -1) throw ValidationError(where + " has children");
                if (node.bag.size() != 1) throw ValidationError(where + " must hold exactly one vertex");
                break;
            case NiceKind::introduce: {
                if (node.children[1] != -1) throw ValidationError(where + " has two children");
                const auto& y = child(0).bag;
                std::vector<Vertex> expect = y;
                expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
                if (std::binary_search(y.begin(), y.end(), node.vertex) || expect != node.bag) {
                    throw ValidationError(where + " must add exactly its vertex to the child bag");
                }
                break;
            }
            case NiceKind::forget: {
                if (node.children[1] != -1) throw ValidationError(where + " has two children");
                const auto& y = child(0).bag;
                std::vector<Vertex> expect = node.bag;
                expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
                if (std::binary_search(node.bag.begin(), node.bag.end(), node.vertex) || expect != y) {
                    throw ValidationError(where + " must drop exactly its vertex from the child bag");
                }
                break;
            }
            case NiceKind::join:
                if (child(0).bag != node.bag || child(1).bag != node.bag) {
                    throw ValidationError(where + " children bags differ");
                }
                break;
        }
    }
    for (int i = 0; i + 1 < count; ++i) {
        if (parent_count[i] != 1) throw ValidationError("nice decomposition: node " + std::to_string(i) + " does not have exactly one parent");
    }
}

TreeDecomposition build_decomposition(const WeightedGraph& g, int width_cap) {
    const std::size_t n = g.n();
    TreeDecomposition td;
    if (n == 0) return td;

    std::vector<std::vector<Vertex>> adj(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& nb : g.neighbors(static_cast<Vertex>(v))) adj[v].push_back(nb.v);
    }
    auto adjacent = [&](Vertex a, Vertex b) { return std::binary_search(adj[a].begin(), adj[a].end(), b); };
    auto fill_in = [&](Vertex v) {
        long count = 0;
        const auto& nb = adj[v];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) count += adjacent(nb[i], nb[j]) ? 0 : 1;
        }
        return count;
    };

    using Key = std::tuple<long, std::size_t, Vertex>;  // (fill, degree, id)
    std::set<Key> queue;
    std::vector<Key> key(n);
    for (std::size_t v = 0; v < n; ++v) {
        key[v] = {fill_in(static_cast<Vertex>(v)), adj[v].size(), static_cast<Vertex>(v)};
        queue.insert(key[v]);
    }

    std::vector<int> position_of(n, -1);
    std::vector<std::vector<Vertex>> later(n);  // neighbors at elimination time
    std::vector<Vertex> order;
    order.reserve(n);
    std::vector<char> stale(n, 0);
    while (!queue.empty()) {
        const Vertex v = std::get<2>(*queue.begin());
        queue.erase(queue.begin());
        const auto nb = adj[v];
        if (static_cast<int>(nb.size()) > width_cap) {
            throw CapacityError("decomposition width " + std::to_string(nb.size()) + " exceeds cap " +
                                    std::to_string(width_cap),
                                static_cast<int>(nb.size()));
        }
        position_of[v] = static_cast<int>(order.size());
        order.push_back(v);
        later[v] = nb;
        // Turn N(v) into a clique and detach v.
        for (Vertex a : nb) {
            auto& la = adj[a];
            la.erase(std::lower_bound(la.begin(), la.end(), v));
            for (Vertex b : nb) {
                if (a == b) continue;
                auto it = std::lower_bound(la.begin(), la.end(), b);
                if (it == la.end() || *it != b) la.insert(it, b);
            }
        }
        adj[v].clear();
        // Fill counts can change for N(v) and their neighbors.
        std::vector<Vertex> touched;
        for (Vertex a : nb) {
            if (!stale[a]) {
                stale[a] = 1;
                touched.push_back(a);
            }
            for (Vertex b : adj[a]) {
                if (!stale[b]) {
                    stale[b] = 1;
                    touched.push_back(b);
                }
            }
        }
        for (Vertex w : touched) {
            stale[w] = 0;
            queue.erase(key[w]);
            key[w] = {fill_in(w), adj[w].size(), w};
            queue.insert(key[w]);
        }
    }

    td.bags.resize(n);
    td.parent.assign(n, -1);
    std::vector<int> roots;
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        auto& bag = td.bags[i];
        bag = later[v];
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        if (later[v].empty()) {
            roots.push_back(static_cast<int>(i));
            continue;
        }
        int first = static_cast<int>(n);
        for (Vertex u : later[v]) first = std::min(first, position_of[u]);
        td.parent[i] = first;
    }
    td.root = roots.back();
    for (int r : roots) {
        if (r != td.root) td.parent[r] = td.root;
    }
    return td;
}

NiceTreeDecomposition to_nice(const TreeDecomposition& td) {
    if (td.parent.size() != td.bags.size()) throw ValidationError("decomposition: parent/bag count mismatch");
    const TreeShape shape = tree_shape(td.parent, td.root);
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        check_bag(td.bags[i], i);
        if (td.bags[i].empty()) throw ValidationError("decomposition: bag " + std::to_string(i) + " is empty");
    }
    check_traces(td.bags, td.parent);

    NiceTreeDecomposition ntd;
    if (td.bags.empty()) return ntd;
    auto push = [&](NiceNode node) {
        ntd.nodes.push_back(std::move(node));
        return static_cast<int>(ntd.nodes.size()) - 1;
    };
    // Walks from a node holding `from` up to a node holding `target`: forgets first, then introduces.
    auto morph = [&](int top, const std::vector<Vertex>& target) {
        std::vector<Vertex> bag = ntd.nodes[top].bag;
        for (Vertex v : std::vector<Vertex>(bag)) {
            if (std::binary_search(target.begin(), target.end(), v)) continue;
            bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
            top = push({bag, NiceKind::forget, v, {top, -1}});
        }
        for (Vertex v : target) {
            if (std::binary_search(bag.begin(), bag.end(), v)) continue;
            bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
            top = push({bag, NiceKind::introduce, v, {top, -1}});
        }
        return top;
    };

    std::vector<int> top_of(td.bags.size(), -1);
    for (int node : shape.postorder) {
        const auto& bag = td.bags[node];
        int acc = -1;
        for (int child : shape.children[node]) {
            const int chain = morph(top_of[child], bag);
            acc = acc == -1 ? chain : push({bag, NiceKind::join, kNoVertex, {acc, chain}});
        }
        if (acc == -1) {
            const int leaf = push({{bag.front()}, NiceKind::leaf, kNoVertex, {-1, -1}});
            acc = morph(leaf, bag);
        }
        top_of[node] = acc;
    }
    ntd.root = morph(top_of[td.root], {});
    return ntd;
}

Assignment solve_treewidth(const WeightedGraph& g, const NiceTreeDecomposition& ntd, int width_cap) {
    const int width = ntd.width();
    if (width > width_cap || width + 1 > 62) {
        throw CapacityError("decomposition width " + std::to_string(width) + " exceeds cap " + std::to_string(width_cap),
                            width);
    }
    if (g.n() == 0) return Assignment(g, {});
    validate_nice(ntd);

    const int count = static_cast<int>(ntd.nodes.size());
    std::vector<std::vector<double>> table(count);
    std::vector<std::vector<char>> choice(count);  // forget nodes: 1 when x_v = +1 is kept
    std::vector<char> seen(g.n(), 0);
    // An edge lies in some bag iff it is counted at exactly the introduce nodes below
    // the top of its trace; track that to reject decompositions that miss edges.
    std::vector<char> counted(g.m(), 0);
    const auto all_edges = g.edges();
    auto edge_index = [&](Vertex a, Vertex b) {
        if (a > b) std::swap(a, b);
        auto it = std::lower_bound(all_edges.begin(), all_edges.end(), std::pair{a, b},
                                   [](const Edge& e, std::pair<Vertex, Vertex> k) {
                                       return e.u != k.first ? e.u < k.first : e.v < k.second;
                                   });
        return static_cast<std::size_t>(it - all_edges.begin());
    };

    auto bag_edges = [&](const std::vector<Vertex>& bag) {
        std::vector<BagEdge> out;
        for (std::size_t i = 0; i < bag.size(); ++i) {
            for (const auto& nb : g.neighbors(bag[i])) {
                if (nb.v <= bag[i]) continue;
                auto it = std::lower_bound(bag.begin(), bag.end(), nb.v);
                if (it != bag.end() && *it == nb.v) out.push_back({static_cast<int>(i), static_cast<int>(it - bag.begin()), nb.w});
            }
        }
        return out;
    };

    for (int i = 0; i < count; ++i) {
        const auto& node = ntd.nodes[i];
        const std::size_t rows = std::size_t{1} << node.bag.size();
        for (Vertex v : node.bag) {
            if (static_cast<std::size_t>(v) >= g.n()) throw ValidationError("decomposition: vertex id out of range");
            seen[v] = 1;
        }
        auto& out = table[i];
        out.assign(rows, 0.0);
        switch (node.kind) {
            case NiceKind::leaf:
                break;
            case NiceKind::introduce: {
                const int pos = position(node.bag, node.vertex);
                std::vector<std::pair<int, double>> incident;
                for (const auto& nb : g.neighbors(node.vertex)) {
                    auto it = std::lower_bound(node.bag.begin(), node.bag.end(), nb.v);
                    if (it != node.bag.end() && *it == nb.v) {
                        incident.emplace_back(static_cast<int>(it - node.bag.begin()), nb.w);
                        counted[edge_index(node.vertex, nb.v)] = 1;
                    }
                }
                const auto& child = table[node.children[0]];
                for (Mask x = 0; x < rows; ++x) {
                    const double sv = spin_of(x, pos);
                    double add = 0.0;
                    for (auto [p, w] : incident) add += w * sv * spin_of(x, p);
                    out[x] = child[remove_bit(x, pos)] + add;
                }
                table[node.children[0]] = {};
                break;
            }
            case NiceKind::forget: {
                const auto& childnode = ntd.nodes[node.children[0]];
                const int pos = position(childnode.bag, node.vertex);
                const auto& child = table[node.children[0]];
                auto& pick = choice[i];
                pick.assign(rows, 0);
                for (Mask x = 0; x < rows; ++x) {
                    const double minus = child[insert_bit(x, pos, 0)];
                    const double plus = child[insert_bit(x, pos, 1)];
                    pick[x] = plus >= minus ? 1 : 0;
                    out[x] = std::max(plus, minus);
                }
                table[node.children[0]] = {};
                break;
            }
            case NiceKind::join: {
                const auto edges = bag_edges(node.bag);
                const auto& left = table[node.children[0]];
                const auto& right = table[node.children[1]];
                for (Mask x = 0; x < rows; ++x) {
                    double inner = 0.0;
                    for (const auto& e : edges) inner += e.w * spin_of(x, e.a) * spin_of(x, e.b);
                    out[x] = left[x] + right[x] - inner;
                }
                table[node.children[0]] = {};
                table[node.children[1]] = {};
                break;
            }
        }
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (!seen[v]) throw ValidationError("decomposition: vertex " + std::to_string(v + 1) + " is in no bag");
    }
    for (std::size_t k = 0; k < all_edges.size(); ++k) {
        if (!counted[k]) {
            throw ValidationError("decomposition: edge {" + std::to_string(all_edges[k].u + 1) + "," +
                                  std::to_string(all_edges[k].v + 1) + "} is in no bag");
        }
    }

    const auto& root_table = table[ntd.root];
    Mask best = 0;
    for (Mask x = 1; x < root_table.size(); ++x) {
        if (root_table[x] > root_table[best]) best = x;
    }
    const double optimum = root_table[best];

    // Top-down reconstruction; parents precede children when walking indices downward.
    std::vector<Mask> mask(count, 0);
    mask[ntd.root] = best;
    std::vector<Spin> spins(g.n(), 0);
    for (int i = ntd.root; i >= 0; --i) {
        const auto& node = ntd.nodes[i];
        const Mask x = mask[i];
        for (std::size_t p = 0; p < node.bag.size(); ++p) spins[node.bag[p]] = ((x >> p) & 1) ? 1 : -1;
        switch (node.kind) {
            case NiceKind::leaf:
                break;
            case NiceKind::introduce:
                mask[node.children[0]] = remove_bit(x, position(node.bag, node.vertex));
                break;
            case NiceKind::forget: {
                const int pos = position(ntd.nodes[node.children[0]].bag, node.vertex);
                mask[node.children[0]] = insert_bit(x, pos, static_cast<Mask>(choice[i][x]));
                break;
            }
            case NiceKind::join:
                mask[node.children[0]] = x;
                mask[node.children[1]] = x;
                break;
        }
    }
    Assignment result(g, std::move(spins));
    double scale = 1.0;
    for (const auto& e : g.edges()) scale += std::abs(e.w);
    if (std::abs(result.value() - optimum) > kTolerance * scale) {
        throw InternalError("treewidth DP: reconstructed value " + std::to_string(result.value()) +
                            " differs from table optimum " + std::to_string(optimum) +
                            " (is the decomposition valid for this graph?)");
    }
    return result;
}

Assignment solve_exact_auto(const WeightedGraph& g, int width_cap, std::size_t brute_force_limit) {
    try {
        const TreeDecomposition td = build_decomposition(g, width_cap);
        return solve_treewidth(g, to_nice(td), width_cap);
    } catch (const CapacityError&) {
        if (g.n() <= brute_force_limit) return brute_force(g, brute_force_limit);
        throw;
    }
}

}  // namespace maxqp
