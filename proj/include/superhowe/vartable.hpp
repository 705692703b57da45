#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace howe {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator^(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<unsigned char>(a) ^ static_cast<unsigned char>(b));
}

struct Var {
    char family;   // print letter: x, s (xi), h (eta), y, or a character family
    int sub;       // first index (row-like)
    int sup;       // second index; 0 for single-index families
    Parity parity;
    std::vector<int> weight;  // joint weight under the table's Cartan basis
};

class VarTable;
using TablePtr = std::shared_ptr<const VarTable>;

// Variable table for one model.  Fixes the set of variables, their parities,
// their joint weights and the global order of the odd variables (xi family
// first, then eta, both in lexicographic index order).  Immutable once built.
class VarTable {
public:
    enum class Model { tensor, s2, chars };

    // C[x, xi, eta, y] carrying gl(p|q) x gl(m|n).  Weight entries are ordered
    // (eps~_1..eps~_p, delta~_1..delta~_q, eps_1..eps_m, delta_1..delta_n).
    // with_aux extends the x family to rows m+1..p.
    static TablePtr tensor(int p, int q, int m, int n, bool with_aux = false);

    // C[x_ij, y_kl, eta_ki] for the symmetric square of C^{m|n}.  Weight
    // entries are (eps_1..eps_m, delta_1..delta_n).
    static TablePtr s2(int m, int n);

    // Commuting character variables, one single-indexed family per entry.
    // Weight entries are one slot per variable, in declaration order.
    static TablePtr chars(const std::vector<std::pair<char, int>>& families);

    Model model() const { return model_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int m() const { return m_; }
    int n() const { return n_; }
    bool has_aux() const { return aux_; }

    int count() const { return static_cast<int>(vars_.size()); }
    const Var& var(int id) const { return vars_[static_cast<std::size_t>(id)]; }
    Parity parity(int id) const { return var(id).parity; }
    bool odd(int id) const { return var(id).parity == Parity::odd; }
    int weight_len() const { return weight_len_; }

    // tensor model accessors (1-based indices, throw on out-of-range)
    int x(int l, int i) const;    // even, 1<=l<=m (or <=p with aux), 1<=i<=p
    int xi(int l, int j) const;   // odd,  1<=l<=m, 1<=j<=q
    int eta(int k, int i) const;  // odd,  1<=k<=n, 1<=i<=p
    int y(int k, int j) const;    // even, 1<=k<=n, 1<=j<=q

    // s2 model accessors
    int s2x(int i, int j) const;  // x_ij = x_ji, any order of (i,j)
    // y_kl = -y_lk: returns (id, sign); (-1, 0) encodes y_kk = 0.
    std::pair<int, int> s2y(int k, int l) const;
    int s2eta(int k, int i) const;

    // chars accessor
    int cvar(char family, int idx) const;
    int family_size(char family) const;

    // lookup by printed identity; -1 if absent
    int find(char family, int sub, int sup) const;
    std::string name(int id) const;

    // Tables are identified by pointer; two separately built tables never mix.
    bool same(const VarTable& other) const { return this == &other; }

private:
    VarTable() = default;
    int add(char family, int sub, int sup, Parity parity, std::vector<int> weight);

    Model model_ = Model::chars;
    int p_ = 0, q_ = 0, m_ = 0, n_ = 0;
    bool aux_ = false;
    std::vector<Var> vars_;
    std::map<std::tuple<char, int, int>, int> index_;
    std::map<char, int> family_sizes_;
    int weight_len_ = 0;
};

}  // namespace howe
