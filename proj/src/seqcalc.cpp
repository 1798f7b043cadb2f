#include "knotoid/seqcalc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>

namespace knotoid {

SignSequence::SignSequence(std::vector<int8_t> entries)
    : entries_(std::move(entries)) {
    for (int8_t e : entries_)
        if (e != 1 && e != -1)
            throw std::invalid_argument("sign sequence entries must be +1/-1");
}

SignSequence SignSequence::parse(const std::string& text) {
    std::vector<int8_t> v;
    for (char c : text) {
        if (c == '+')
            v.push_back(1);
        else if (c == '-')
            v.push_back(-1);
        else if (c == ' ' || c == ',' || c == '(' || c == ')')
            continue;
        else
            throw std::invalid_argument(std::string("bad sign character: ") + c);
    }
    return SignSequence(std::move(v));
}

int SignSequence::h_pos() const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), 1));
}

int SignSequence::h_neg() const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), -1));
}

SignSequence SignSequence::reversed() const {
    std::vector<int8_t> v(entries_.rbegin(), entries_.rend());
    return SignSequence(std::move(v));
}

SignSequence SignSequence::negated() const {
    std::vector<int8_t> v = entries_;
    for (auto& e : v) e = -e;
    return SignSequence(std::move(v));
}

SignSequence SignSequence::concat(const SignSequence& o) const {
    std::vector<int8_t> v = entries_;
    v.insert(v.end(), o.entries_.begin(), o.entries_.end());
    return SignSequence(std::move(v));
}

std::string SignSequence::str() const {
    std::string s;
    s.reserve(entries_.size());
    for (int8_t e : entries_) s += (e > 0 ? '+' : '-');
    return s;
}

namespace {

// Insert `count` copies of the block (a, b) into `base` simultaneously:
// a multiset of gap positions of `base` is chosen, and every copy stays
// consecutive in the result (copies at the same gap sit side by side).
void insert_blocks(const std::vector<int8_t>& base, int count, int8_t a,
                   int8_t b, std::set<SignSequence>& out) {
    std::vector<size_t> gaps;
    std::function<void(size_t)> choose = [&](size_t from) {
        if (static_cast<int>(gaps.size()) == count) {
            std::vector<int8_t> result = base;
            for (auto it = gaps.rbegin(); it != gaps.rend(); ++it)
                result.insert(result.begin() + *it, {a, b});
            out.insert(SignSequence(std::move(result)));
            return;
        }
        for (size_t g = from; g <= base.size(); ++g) {
            gaps.push_back(g);
            choose(g);
            gaps.pop_back();
        }
    };
    choose(0);
}

}  // namespace

std::set<SignSequence> shift_results(const SignSequence& a, ShiftDirection dir,
                                     int size) {
    if (size < 1) throw std::invalid_argument("shift size must be >= 1");
    const int8_t del_a = dir == ShiftDirection::Left ? -1 : 1;
    const int8_t del_b = static_cast<int8_t>(-del_a);
    const auto& e = a.entries();

    // positions i with (e[i], e[i+1]) equal to the deletable pair
    std::vector<size_t> sites;
    for (size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] == del_a && e[i + 1] == del_b) sites.push_back(i);

    std::set<SignSequence> out;

    // choose `size` pairwise disjoint sites (index pairs must not overlap)
    std::vector<size_t> chosen;
    std::function<void(size_t)> choose = [&](size_t from) {
        if (static_cast<int>(chosen.size()) == size) {
            std::vector<bool> drop(e.size(), false);
            for (size_t s : chosen) drop[s] = drop[s + 1] = true;
            std::vector<int8_t> base;
            for (size_t i = 0; i < e.size(); ++i)
                if (!drop[i]) base.push_back(e[i]);
            insert_blocks(base, size, del_b, del_a, out);
            return;
        }
        for (size_t i = from; i < sites.size(); ++i) {
            if (!chosen.empty() && sites[i] <= chosen.back() + 1) continue;
            chosen.push_back(sites[i]);
            choose(i + 1);
            chosen.pop_back();
        }
    };
    choose(0);
    return out;
}

std::set<SignSequence> all_shift_results(const SignSequence& a) {
    std::set<SignSequence> out;
    const int max_size = static_cast<int>(a.size()) / 2;
    for (int n = 1; n <= max_size; ++n) {
        for (auto dir : {ShiftDirection::Left, ShiftDirection::Right}) {
            auto r = shift_results(a, dir, n);
            out.insert(r.begin(), r.end());
        }
    }
    return out;
}

ShiftConnectivity shift_connected(const std::set<SignSequence>& s) {
    ShiftConnectivity result;
    if (s.size() <= 1) {
        result.connected = true;
        return result;
    }
    std::vector<SignSequence> members(s.begin(), s.end());
    const size_t len = members[0].size();
    const int hp = members[0].h_pos();
    for (const auto& m : members)
        if (m.size() != len || m.h_pos() != hp) return result;  // mixed set

    std::map<SignSequence, size_t> index;
    for (size_t i = 0; i < members.size(); ++i) index[members[i]] = i;

    std::vector<bool> seen(members.size(), false);
    std::queue<size_t> q;
    q.push(0);
    seen[0] = true;
    size_t reached = 1;
    while (!q.empty()) {
        size_t i = q.front();
        q.pop();
        for (const auto& nb : all_shift_results(members[i])) {
            auto it = index.find(nb);
            if (it == index.end() || seen[it->second]) continue;
            seen[it->second] = true;
            result.tree_edges.emplace_back(i, it->second);
            ++reached;
            q.push(it->second);
        }
    }
    result.connected = reached == members.size();
    if (!result.connected) result.tree_edges.clear();
    return result;
}

bool consecutive_subsum_exists(const SignSequence& a, int target) {
    if (target == 0) return true;  // empty run
    const auto& e = a.entries();
    for (size_t i = 0; i < e.size(); ++i) {
        int sum = 0;
        for (size_t j = i; j < e.size(); ++j) {
            sum += e[j];
            if (sum == target) return true;
        }
    }
    return false;
}

SignSequence lift_subsequence(const SignSequence& a, int n, int x) {
    if (n < 1) throw std::invalid_argument("lift modulus must be >= 1");
    const auto& e = a.entries();
    std::vector<int8_t> kept;
    int prev = 0;  // p(i-1)
    for (size_t i = 0; i < e.size(); ++i) {
        int cur = prev + e[i];
        int q = std::max(prev, cur);
        int r = ((q % n) + n) % n;
        int xr = ((x % n) + n) % n;
        if (r == xr) kept.push_back(e[i]);
        prev = cur;
    }
    return SignSequence(std::move(kept));
}

}  // namespace knotoid
