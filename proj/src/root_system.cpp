#include "chev/root_system.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "chev/ring.hpp"

namespace chev {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

const RootSystem& RootSystem::get(char type, int rank) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{type, rank}];
    if (!slot) slot.reset(new RootSystem(type, rank));
    return *slot;
}

const RootSystem& RootSystem::parse(const std::string& label) {
    if (label.size() < 2) throw InvalidInput("bad root system label '" + label + "'");
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (const std::exception&) {
        throw InvalidInput("bad root system label '" + label + "'");
    }
    return get(static_cast<char>(std::toupper(static_cast<unsigned char>(label[0]))), rank);
}

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
    bool ok = false;
    switch (type) {
        case 'A': ok = rank >= 1; break;
        case 'B':
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 4; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: break;
    }
    // keep integer sizes sane
    if (ok && rank > 12) ok = false;
    if (!ok) throw InvalidInput("unsupported root system " + std::string(1, type) + std::to_string(rank));
    build_gram();
    build_roots();
}

void RootSystem::build_gram() {
    const int l = rank_;
    gram_.assign(l, std::vector<int>(l, 0));
    auto link = [&](int i, int j, int v) { gram_[i - 1][j - 1] = gram_[j - 1][i - 1] = v; };
    switch (type_) {
        case 'A':
            for (int i = 1; i <= l; ++i) gram_[i - 1][i - 1] = 2;
            for (int i = 1; i < l; ++i) link(i, i + 1, -1);
            break;
        case 'B':
            for (int i = 1; i < l; ++i) gram_[i - 1][i - 1] = 4;
            gram_[l - 1][l - 1] = 2;
            for (int i = 1; i < l; ++i) link(i, i + 1, -2);
            break;
        case 'C':
            for (int i = 1; i < l; ++i) gram_[i - 1][i - 1] = 2;
            gram_[l - 1][l - 1] = 4;
            for (int i = 1; i + 1 < l; ++i) link(i, i + 1, -1);
            link(l - 1, l, -2);
            break;
        case 'D':
            for (int i = 1; i <= l; ++i) gram_[i - 1][i - 1] = 2;
            for (int i = 1; i + 1 < l; ++i) link(i, i + 1, -1);
            link(l - 2, l, -1);
            break;
        case 'E':
            for (int i = 1; i <= l; ++i) gram_[i - 1][i - 1] = 2;
            link(1, 3, -1);
            link(2, 4, -1);
            for (int i = 3; i < l; ++i) link(i, i + 1, -1);
            break;
        case 'F':
            gram_ = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
            break;
        case 'G':
            gram_ = {{2, -3}, {-3, 6}};
            break;
    }
    cartan_.assign(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];
}

void RootSystem::build_roots() {
    const int l = rank_;
    std::map<Root, int> known;
    std::vector<Root> pos;
    auto pair_simple = [&](const Root& b, int i) {  // <b, alpha_i^vee>
        int s = 0;
        for (int j = 0; j < l; ++j) s += b[j] * cartan_[j][i];
        return s;
    };
    for (int i = 0; i < l; ++i) {
        Root r(l, 0);
        r[i] = 1;
        pos.push_back(r);
        known[r] = 1;
    }
    // grow by height; the alpha_i-string below b is already known
    for (std::size_t at = 0; at < pos.size(); ++at) {
        Root b = pos[at];
        for (int i = 0; i < l; ++i) {
            Root unit(l, 0);
            unit[i] = 1;
            if (b == unit) continue;
            int r = 0;
            Root down = b;
            while (true) {
                down[i] -= 1;
                if (!known.count(down)) break;
                ++r;
            }
            int q = r - pair_simple(b, i);
            if (q > 0) {
                Root up = b;
                up[i] += 1;
                if (!known.count(up)) {
                    known[up] = 1;
                    pos.push_back(up);
                }
            }
        }
    }
    auto ht = [](const Root& r) {
        int s = 0;
        for (int c : r) s += c;
        return s;
    };
    std::sort(pos.begin(), pos.end(), [&](const Root& a, const Root& b) {
        if (ht(a) != ht(b)) return ht(a) < ht(b);
        return a > b;
    });
    roots_ = pos;
    for (const Root& r : pos) {
        Root n = r;
        for (int& c : n) c = -c;
        roots_.push_back(n);
    }
    const int nr = num_roots();
    simple_.resize(l);
    for (int i = 0; i < l; ++i) {
        Root u(l, 0);
        u[i] = 1;
        simple_[i] = static_cast<int>(std::find(roots_.begin(), roots_.end(), u) - roots_.begin());
    }
    height_.resize(nr);
    norm2_.resize(nr);
    for (int a = 0; a < nr; ++a) {
        height_[a] = ht(roots_[a]);
        int s = 0;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) s += roots_[a][i] * gram_[i][j] * roots_[a][j];
        norm2_[a] = s;
        max_norm_ = std::max(max_norm_, s);
    }
    for (int a = 0; a < nr; ++a) index_[roots_[a]] = a;
    const auto& idx = index_;
    pairing_.assign(nr, std::vector<int>(nr, 0));
    sum_.assign(nr, std::vector<int>(nr, -1));
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            pairing_[a][b] = 2 * inner(a, b) / norm2_[b];
            Root s(l);
            for (int i = 0; i < l; ++i) s[i] = roots_[a][i] + roots_[b][i];
            auto it = idx.find(s);
            if (it != idx.end()) sum_[a][b] = it->second;
        }
    sreflect_.assign(l, std::vector<int>(nr));
    for (int k = 0; k < l; ++k)
        for (int b = 0; b < nr; ++b) sreflect_[k][b] = reflect(simple_[k], b);
    coroot_.assign(nr, std::vector<int>(l));
    for (int a = 0; a < nr; ++a)
        for (int j = 0; j < l; ++j) coroot_[a][j] = roots_[a][j] * gram_[j][j] / norm2_[a];
    if (nr != coxeter_number() * l) throw std::logic_error("root count is not h * rank");
}

int RootSystem::index_of(const Root& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

int RootSystem::inner(int a, int b) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += roots_[a][i] * gram_[i][j] * roots_[b][j];
    return s;
}

std::pair<int, int> RootSystem::string(int beta, int alpha) const {
    int r = 0, q = 0;
    for (int cur = beta; (cur = sum(cur, neg(alpha))) >= 0;) ++r;
    for (int cur = beta; (cur = sum(cur, alpha)) >= 0;) ++q;
    return {r, q};
}

int RootSystem::reflect(int alpha, int beta) const {
    const int p = 2 * inner(beta, alpha) / norm2_[alpha];
    Root r = roots_[beta];
    for (int i = 0; i < rank_; ++i) r[i] -= p * roots_[alpha][i];
    return index_of(r);
}

int RootSystem::weyl_act(const WeylWord& w, int beta) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it < 1 || *it > rank_) throw InvalidInput("reflection index out of range");
        beta = sreflect_[*it - 1][beta];
    }
    return beta;
}

std::vector<int> RootSystem::weyl_perm(const WeylWord& w) const {
    std::vector<int> p(num_roots());
    for (int b = 0; b < num_roots(); ++b) p[b] = weyl_act(w, b);
    return p;
}

WeylWord RootSystem::reduced_word(const std::vector<int>& perm) const {
    std::vector<int> p = perm;
    WeylWord letters;
    for (bool moved = true; moved;) {
        moved = false;
        for (int k = 1; k <= rank_; ++k)
            if (!positive(p[simple(k)])) {
                letters.push_back(k);
                p = compose(p, sreflect_[k - 1]);
                moved = true;
                break;
            }
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

WeylWord RootSystem::longest_word(const std::vector<int>& simple_subset) const {
    std::vector<int> ks = simple_subset;
    if (ks.empty())
        for (int k = 1; k <= rank_; ++k) ks.push_back(k);
    std::vector<int> p(num_roots());
    for (int b = 0; b < num_roots(); ++b) p[b] = b;
    WeylWord w;
    for (bool grew = true; grew;) {
        grew = false;
        for (int k : ks)
            if (positive(p[simple(k)])) {
                w.push_back(k);
                p = compose(p, sreflect_[k - 1]);
                grew = true;
                break;
            }
    }
    return w;
}

RootSet RootSystem::sigma_k(int k) const {
    RootSet s;
    for (int a = 0; a < num_roots(); ++a)
        if (roots_[a][k - 1] >= 1) s.push_back(a);
    return s;
}

RootSet RootSystem::delta_k(int k) const {
    RootSet s;
    for (int a = 0; a < num_roots(); ++a)
        if (roots_[a][k - 1] == 0) s.push_back(a);
    return s;
}

RootSet RootSystem::positive_roots() const {
    RootSet s(num_positive());
    for (int a = 0; a < num_positive(); ++a) s[a] = a;
    return s;
}

RootSet RootSystem::all_roots() const {
    RootSet s(num_roots());
    for (int a = 0; a < num_roots(); ++a) s[a] = a;
    return s;
}

bool RootSystem::is_closed(const RootSet& s) const {
    std::vector<char> in(num_roots(), 0);
    for (int a : s) in[a] = 1;
    for (int a : s)
        for (int b : s) {
            int c = sum(a, b);
            if (c >= 0 && !in[c]) return false;
        }
    return true;
}

bool RootSystem::is_unipotent(const RootSet& s) const {
    std::vector<char> in(num_roots(), 0);
    for (int a : s) in[a] = 1;
    for (int a : s)
        if (in[neg(a)]) return false;
    return true;
}

bool RootSystem::is_symmetric(const RootSet& s) const {
    std::vector<char> in(num_roots(), 0);
    for (int a : s) in[a] = 1;
    for (int a : s)
        if (!in[neg(a)]) return false;
    return true;
}

WeylWord RootSystem::pi_word() const {
    const int l = rank_;
    WeylWord w;
    switch (type_) {
        case 'A':
        case 'B':
        case 'C':
        case 'F':
            for (int i = 1; i <= l; ++i) w.push_back(i);
            return w;
        case 'D':
            for (int i = l; i >= 1; --i) w.push_back(i);
            return w;
        case 'E':
            if (l == 6) return {1, 3, 4, 5, 6};
            if (l == 7) return {1, 3, 2, 4, 5, 6, 7};
            return {1, 3, 2, 4, 5, 6, 7, 8};
        case 'G':
            return {2, 1};
    }
    throw InvalidInput("no distinguished element for " + label());
}

RootSystem::Partition RootSystem::omega_theta(const WeylWord& w) const {
    auto p = weyl_perm(w);
    Partition out;
    for (int a = 0; a < num_positive(); ++a) {
        int cur = a;
        int k = 0;
        bool escaped = false;
        // an orbit is at most |Phi| long
        for (int step = 0; step <= num_roots(); ++step) {
            cur = p[cur];
            if (!positive(cur)) {
                escaped = true;
                break;
            }
            if (cur == a) break;
            ++k;
        }
        if (!escaped) {
            out.theta.push_back(a);
            continue;
        }
        if (static_cast<int>(out.omega.size()) <= k) out.omega.resize(k + 1);
        out.omega[k].push_back(a);
    }
    return out;
}

RootSet RootSystem::companion_sigma() const {
    auto part = omega_theta(pi_word());
    RootSet s = part.omega.empty() ? RootSet{} : part.omega[0];
    if (type_ == 'E' && rank_ == 6) {
        for (int a : part.theta)
            if (a != simple(2)) s.push_back(a);
        std::sort(s.begin(), s.end());
    }
    return s;
}

nlohmann::json RootSystem::root_json(int i) const { return roots_[i]; }

nlohmann::json RootSystem::set_json(const RootSet& s) const {
    std::vector<Root> rs;
    for (int a : s) rs.push_back(roots_[a]);
    std::sort(rs.begin(), rs.end());
    return rs;
}

int RootSystem::root_from_json(const nlohmann::json& j) const {
    if (!j.is_array()) throw InvalidInput("root must be an integer array");
    Root r;
    for (const auto& c : j) {
        if (!c.is_number_integer()) throw InvalidInput("root must be an integer array");
        r.push_back(c.get<int>());
    }
    int i = index_of(r);
    if (i < 0) throw InvalidInput("not a root of " + label() + ": " + j.dump());
    return i;
}

std::string RootSystem::root_str(int i) const {
    std::string s = positive(i) ? "" : "-";
    for (int c : roots_[i]) s += std::to_string(c < 0 ? -c : c);
    return s;
}

}  // namespace chev
