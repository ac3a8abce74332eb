// Copyright 2026 The ccsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccsurf/matching.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "ccsurf/error.h"

namespace ccsurf {

namespace {

// Primal-dual blossom algorithm in O(n^3), following the classic
// formulation with S/T labels, nested blossoms and four kinds of dual
// updates. Endpoint p of edge k is 2k or 2k+1; endpoint[p] is its vertex.
// Weights are doubled on entry so every dual update stays integral.
class Blossom {
   public:
    Blossom(const std::vector<WeightedEdge>& edges, bool max_cardinality)
        : max_card_(max_cardinality) {
        int nv = 0;
        for (const auto& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u == e.v) {
                throw std::invalid_argument("matching edges need two distinct non-negative endpoints");
            }
            nv = std::max({nv, e.u + 1, e.v + 1});
            edges_.push_back({e.u, e.v, 2 * e.weight});
        }
        n_ = nv;
        std::int64_t maxw = 0;
        for (const auto& e : edges_) {
            maxw = std::max(maxw, e.weight);
        }
        const auto ne = edges_.size();
        endpoint_.resize(2 * ne);
        for (std::size_t p = 0; p < 2 * ne; ++p) {
            endpoint_[p] = p % 2 == 0 ? edges_[p / 2].u : edges_[p / 2].v;
        }
        neighbend_.assign(static_cast<std::size_t>(n_), {});
        for (std::size_t k = 0; k < ne; ++k) {
            neighbend_[static_cast<std::size_t>(edges_[k].u)].push_back(static_cast<int>(2 * k + 1));
            neighbend_[static_cast<std::size_t>(edges_[k].v)].push_back(static_cast<int>(2 * k));
        }
        const auto n2 = static_cast<std::size_t>(2 * n_);
        mate_.assign(static_cast<std::size_t>(n_), -1);
        label_.assign(n2, 0);
        labelend_.assign(n2, -1);
        inblossom_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            inblossom_[static_cast<std::size_t>(v)] = v;
        }
        blossomparent_.assign(n2, -1);
        blossomchilds_.assign(n2, {});
        blossombase_.assign(n2, -1);
        for (int v = 0; v < n_; ++v) {
            blossombase_[static_cast<std::size_t>(v)] = v;
        }
        blossomendps_.assign(n2, {});
        bestedge_.assign(n2, -1);
        blossombestedges_.assign(n2, std::nullopt);
        for (int b = 2 * n_ - 1; b >= n_; --b) {
            unused_.push_back(b);
        }
        std::reverse(unused_.begin(), unused_.end());
        dualvar_.assign(n2, 0);
        for (int v = 0; v < n_; ++v) {
            dualvar_[static_cast<std::size_t>(v)] = maxw;
        }
        allowedge_.assign(ne, false);
    }

    std::vector<int> run() {
        for (int stage = 0; stage < n_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n_; b < 2 * n_; ++b) {
                blossombestedges_[at(b)].reset();
            }
            std::fill(allowedge_.begin(), allowedge_.end(), false);
            queue_.clear();
            for (int v = 0; v < n_; ++v) {
                if (mate_[at(v)] == -1 && label_[at(inblossom_[at(v)])] == 0) {
                    assign_label(v, 1, -1);
                }
            }
            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    const int v = queue_.back();
                    queue_.pop_back();
                    for (int p : neighbend_[at(v)]) {
                        const int k = p / 2;
                        const int w = endpoint_[at(p)];
                        if (inblossom_[at(v)] == inblossom_[at(w)]) {
                            continue;
                        }
                        std::int64_t kslack = 0;
                        if (!allowedge_[at(k)]) {
                            kslack = slack(k);
                            if (kslack <= 0) {
                                allowedge_[at(k)] = true;
                            }
                        }
                        if (allowedge_[at(k)]) {
                            if (label_[at(inblossom_[at(w)])] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[at(inblossom_[at(w)])] == 1) {
                                const int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[at(w)] == 0) {
                                label_[at(w)] = 2;
                                labelend_[at(w)] = p ^ 1;
                            }
                        } else if (label_[at(inblossom_[at(w)])] == 1) {
                            const int b = inblossom_[at(v)];
                            if (bestedge_[at(b)] == -1 || kslack < slack(bestedge_[at(b)])) {
                                bestedge_[at(b)] = k;
                            }
                        } else if (label_[at(w)] == 0) {
                            if (bestedge_[at(w)] == -1 || kslack < slack(bestedge_[at(w)])) {
                                bestedge_[at(w)] = k;
                            }
                        }
                    }
                }
                if (augmented) {
                    break;
                }

                int deltatype = -1;
                std::int64_t delta = 0;
                int deltaedge = -1;
                int deltablossom = -1;
                if (!max_card_) {
                    deltatype = 1;
                    delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
                }
                for (int v = 0; v < n_; ++v) {
                    if (label_[at(inblossom_[at(v)])] == 0 && bestedge_[at(v)] != -1) {
                        const auto d = slack(bestedge_[at(v)]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[at(v)];
                        }
                    }
                }
                for (int b = 0; b < 2 * n_; ++b) {
                    if (blossomparent_[at(b)] == -1 && label_[at(b)] == 1 && bestedge_[at(b)] != -1) {
                        const auto ks = slack(bestedge_[at(b)]);
                        if (ks % 2 != 0) {
                            throw InternalError("odd slack on an S-S edge");
                        }
                        const auto d = ks / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[at(b)];
                        }
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[at(b)] >= 0 && blossomparent_[at(b)] == -1 && label_[at(b)] == 2 &&
                        (deltatype == -1 || dualvar_[at(b)] < delta)) {
                        delta = dualvar_[at(b)];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    deltatype = 1;
                    delta = std::max<std::int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
                }

                for (int v = 0; v < n_; ++v) {
                    const int l = label_[at(inblossom_[at(v)])];
                    if (l == 1) {
                        dualvar_[at(v)] -= delta;
                    } else if (l == 2) {
                        dualvar_[at(v)] += delta;
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[at(b)] >= 0 && blossomparent_[at(b)] == -1) {
                        if (label_[at(b)] == 1) {
                            dualvar_[at(b)] += delta;
                        } else if (label_[at(b)] == 2) {
                            dualvar_[at(b)] -= delta;
                        }
                    }
                }

                if (deltatype == 1) {
                    break;
                }
                if (deltatype == 2) {
                    allowedge_[at(deltaedge)] = true;
                    int i = edges_[at(deltaedge)].u;
                    int j = edges_[at(deltaedge)].v;
                    if (label_[at(inblossom_[at(i)])] == 0) {
                        std::swap(i, j);
                    }
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[at(deltaedge)] = true;
                    queue_.push_back(edges_[at(deltaedge)].u);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) {
                break;
            }
            for (int b = n_; b < 2 * n_; ++b) {
                if (blossomparent_[at(b)] == -1 && blossombase_[at(b)] >= 0 && label_[at(b)] == 1 &&
                    dualvar_[at(b)] == 0) {
                    expand_blossom(b, true);
                }
            }
        }
        std::vector<int> out(static_cast<std::size_t>(n_), -1);
        for (int v = 0; v < n_; ++v) {
            if (mate_[at(v)] >= 0) {
                out[at(v)] = endpoint_[at(mate_[at(v)])];
            }
        }
        return out;
    }

   private:
    static std::size_t at(int i) { return static_cast<std::size_t>(i); }

    std::int64_t slack(int k) const {
        const auto& e = edges_[at(k)];
        return dualvar_[at(e.u)] + dualvar_[at(e.v)] - 2 * e.weight;
    }

    void leaves(int b, std::vector<int>& out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[at(b)]) {
            leaves(t, out);
        }
    }

    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p) {
        const int b = inblossom_[at(w)];
        label_[at(w)] = label_[at(b)] = t;
        labelend_[at(w)] = labelend_[at(b)] = p;
        bestedge_[at(w)] = bestedge_[at(b)] = -1;
        if (t == 1) {
            leaves(b, queue_);
        } else if (t == 2) {
            const int base = blossombase_[at(b)];
            const int mb = mate_[at(base)];
            assign_label(endpoint_[at(mb)], 1, mb ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[at(v)];
            if (label_[at(b)] & 4) {
                base = blossombase_[at(b)];
                break;
            }
            path.push_back(b);
            label_[at(b)] = 5;
            if (labelend_[at(b)] == -1) {
                v = -1;
            } else {
                v = endpoint_[at(labelend_[at(b)])];
                b = inblossom_[at(v)];
                v = endpoint_[at(labelend_[at(b)])];
            }
            if (w != -1) {
                std::swap(v, w);
            }
        }
        for (int b : path) {
            label_[at(b)] = 1;
        }
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[at(k)].u;
        int w = edges_[at(k)].v;
        const int bb = inblossom_[at(base)];
        int bv = inblossom_[at(v)];
        int bw = inblossom_[at(w)];
        const int b = unused_.back();
        unused_.pop_back();
        blossombase_[at(b)] = base;
        blossomparent_[at(b)] = -1;
        blossomparent_[at(bb)] = b;
        std::vector<int> path;
        std::vector<int> endps;
        while (bv != bb) {
            blossomparent_[at(bv)] = b;
            path.push_back(bv);
            endps.push_back(labelend_[at(bv)]);
            v = endpoint_[at(labelend_[at(bv)])];
            bv = inblossom_[at(v)];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[at(bw)] = b;
            path.push_back(bw);
            endps.push_back(labelend_[at(bw)] ^ 1);
            w = endpoint_[at(labelend_[at(bw)])];
            bw = inblossom_[at(w)];
        }
        blossomchilds_[at(b)] = path;
        blossomendps_[at(b)] = endps;
        label_[at(b)] = 1;
        labelend_[at(b)] = labelend_[at(bb)];
        dualvar_[at(b)] = 0;
        for (int leaf : leaves(b)) {
            if (label_[at(inblossom_[at(leaf)])] == 2) {
                queue_.push_back(leaf);
            }
            inblossom_[at(leaf)] = b;
        }

        std::vector<int> bestedgeto(at(2 * n_), -1);
        for (int sub : path) {
            std::vector<std::vector<int>> nblists;
            if (!blossombestedges_[at(sub)]) {
                for (int leaf : leaves(sub)) {
                    std::vector<int> ks;
                    for (int p : neighbend_[at(leaf)]) {
                        ks.push_back(p / 2);
                    }
                    nblists.push_back(std::move(ks));
                }
            } else {
                nblists.push_back(*blossombestedges_[at(sub)]);
            }
            for (const auto& nb : nblists) {
                for (int kk : nb) {
                    int i = edges_[at(kk)].u;
                    int j = edges_[at(kk)].v;
                    if (inblossom_[at(j)] == b) {
                        std::swap(i, j);
                    }
                    const int bj = inblossom_[at(j)];
                    if (bj != b && label_[at(bj)] == 1 &&
                        (bestedgeto[at(bj)] == -1 || slack(kk) < slack(bestedgeto[at(bj)]))) {
                        bestedgeto[at(bj)] = kk;
                    }
                }
            }
            blossombestedges_[at(sub)].reset();
            bestedge_[at(sub)] = -1;
        }
        std::vector<int> best;
        for (int kk : bestedgeto) {
            if (kk != -1) {
                best.push_back(kk);
            }
        }
        bestedge_[at(b)] = -1;
        for (int kk : best) {
            if (bestedge_[at(b)] == -1 || slack(kk) < slack(bestedge_[at(b)])) {
                bestedge_[at(b)] = kk;
            }
        }
        blossombestedges_[at(b)] = std::move(best);
    }

    void expand_blossom(int b, bool endstage) {
        const auto childs = blossomchilds_[at(b)];
        for (int s : childs) {
            blossomparent_[at(s)] = -1;
            if (s < n_) {
                inblossom_[at(s)] = s;
            } else if (endstage && dualvar_[at(s)] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int leaf : leaves(s)) {
                    inblossom_[at(leaf)] = s;
                }
            }
        }
        if (!endstage && label_[at(b)] == 2) {
            const auto& ch = blossomchilds_[at(b)];
            const auto& endps = blossomendps_[at(b)];
            const int len = static_cast<int>(ch.size());
            const auto child = [&](int j) { return ch[at(((j % len) + len) % len)]; };
            const auto endp = [&](int j) { return endps[at(((j % len) + len) % len)]; };
            const int entrychild = inblossom_[at(endpoint_[at(labelend_[at(b)] ^ 1)])];
            int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
            int jstep;
            int endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[at(b)];
            while (j != 0) {
                label_[at(endpoint_[at(p ^ 1)])] = 0;
                label_[at(endpoint_[at(endp(j - endptrick) ^ endptrick ^ 1)])] = 0;
                assign_label(endpoint_[at(p ^ 1)], 2, p);
                allowedge_[at(endp(j - endptrick) / 2)] = true;
                j += jstep;
                p = endp(j - endptrick) ^ endptrick;
                allowedge_[at(p / 2)] = true;
                j += jstep;
            }
            int bv = child(j);
            label_[at(endpoint_[at(p ^ 1)])] = label_[at(bv)] = 2;
            labelend_[at(endpoint_[at(p ^ 1)])] = labelend_[at(bv)] = p;
            bestedge_[at(bv)] = -1;
            j += jstep;
            while (child(j) != entrychild) {
                bv = child(j);
                if (label_[at(bv)] == 1) {
                    j += jstep;
                    continue;
                }
                int found = -1;
                for (int leaf : leaves(bv)) {
                    if (label_[at(leaf)] != 0) {
                        found = leaf;
                        break;
                    }
                }
                if (found >= 0) {
                    label_[at(found)] = 0;
                    label_[at(endpoint_[at(mate_[at(blossombase_[at(bv)])])])] = 0;
                    assign_label(found, 2, labelend_[at(found)]);
                }
                j += jstep;
            }
        }
        label_[at(b)] = -1;
        labelend_[at(b)] = -1;
        blossomchilds_[at(b)].clear();
        blossomendps_[at(b)].clear();
        blossombase_[at(b)] = -1;
        blossombestedges_[at(b)].reset();
        bestedge_[at(b)] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[at(t)] != b) {
            t = blossomparent_[at(t)];
        }
        if (t >= n_) {
            augment_blossom(t, v);
        }
        auto& ch = blossomchilds_[at(b)];
        auto& endps = blossomendps_[at(b)];
        const int len = static_cast<int>(ch.size());
        const auto wrap = [&](int j) { return at(((j % len) + len) % len); };
        const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
        int j = i;
        int jstep;
        int endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = ch[wrap(j)];
            const int p = endps[wrap(j - endptrick)] ^ endptrick;
            if (t >= n_) {
                augment_blossom(t, endpoint_[at(p)]);
            }
            j += jstep;
            t = ch[wrap(j)];
            if (t >= n_) {
                augment_blossom(t, endpoint_[at(p ^ 1)]);
            }
            mate_[at(endpoint_[at(p)])] = p ^ 1;
            mate_[at(endpoint_[at(p ^ 1)])] = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase_[at(b)] = blossombase_[at(ch[0])];
    }

    void augment_matching(int k) {
        const int v = edges_[at(k)].u;
        const int w = edges_[at(k)].v;
        for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
            while (true) {
                const int bs = inblossom_[at(s)];
                if (bs >= n_) {
                    augment_blossom(bs, s);
                }
                mate_[at(s)] = p;
                if (labelend_[at(bs)] == -1) {
                    break;
                }
                const int t = endpoint_[at(labelend_[at(bs)])];
                const int bt = inblossom_[at(t)];
                s = endpoint_[at(labelend_[at(bt)])];
                const int j = endpoint_[at(labelend_[at(bt)] ^ 1)];
                if (bt >= n_) {
                    augment_blossom(bt, j);
                }
                mate_[at(j)] = labelend_[at(bt)];
                p = labelend_[at(bt)] ^ 1;
            }
        }
    }

    bool max_card_;
    int n_ = 0;
    std::vector<WeightedEdge> edges_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::optional<std::vector<int>>> blossombestedges_;
    std::vector<int> unused_;
    std::vector<std::int64_t> dualvar_;
    std::vector<bool> allowedge_;
    std::vector<int> queue_;
};

void check_costs(const CostMatrix& cost) {
    const std::size_t n = cost.size();
    if (n % 2 != 0) {
        throw InternalError("perfect matching needs an even number of nodes, got " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (cost[i].size() != n) {
            throw std::invalid_argument("cost matrix is not square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (cost[i][j] != cost[j][i] || cost[i][j] < 0) {
                throw std::invalid_argument("cost matrix must be symmetric and non-negative");
            }
        }
    }
}

}  // namespace

std::vector<int> max_weight_matching(const std::vector<WeightedEdge>& edges, bool max_cardinality) {
    if (edges.empty()) {
        return {};
    }
    return Blossom(edges, max_cardinality).run();
}

std::vector<int> min_weight_perfect_matching(const CostMatrix& cost) {
    check_costs(cost);
    const std::size_t n = cost.size();
    if (n == 0) {
        return {};
    }
    std::int64_t top = 0;
    for (const auto& row : cost) {
        top = std::max(top, *std::max_element(row.begin(), row.end()));
    }
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            edges.push_back({static_cast<int>(i), static_cast<int>(j), top + 1 - cost[i][j]});
        }
    }
    auto mate = Blossom(edges, true).run();
    mate.resize(n, -1);
    if (std::find(mate.begin(), mate.end(), -1) != mate.end()) {
        throw InternalError("blossom matching is not perfect on a complete graph");
    }
    return mate;
}

std::vector<int> greedy_perfect_matching(const CostMatrix& cost) {
    check_costs(cost);
    const std::size_t n = cost.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [&](const auto& a, const auto& b) { return cost[a.first][a.second] < cost[b.first][b.second]; });
    std::vector<int> mate(n, -1);
    for (const auto& [i, j] : pairs) {
        if (mate[i] == -1 && mate[j] == -1) {
            mate[i] = static_cast<int>(j);
            mate[j] = static_cast<int>(i);
        }
    }
    return mate;
}

std::vector<int> perfect_matching(const CostMatrix& cost, Matcher matcher) {
    return matcher == Matcher::Blossom ? min_weight_perfect_matching(cost) : greedy_perfect_matching(cost);
}

std::int64_t matching_cost(const CostMatrix& cost, const std::vector<int>& mate) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < mate.size(); ++i) {
        if (mate[i] > static_cast<int>(i)) {
            total += cost[i][static_cast<std::size_t>(mate[i])];
        }
    }
    return total;
}

}  // namespace ccsurf
