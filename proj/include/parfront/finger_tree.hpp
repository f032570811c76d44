#pragma once

#include "parfront/counters.hpp"
#include "parfront/util.hpp"

#include <cstdint>
#include <vector>

namespace parfront {

// Ordered list with finger insertion: a doubly linked skip list whose towers
// are linked on every level, so an insertion that lands d positions past its
// finger costs O(1 + log d) expected. Seeded deterministically per run.
template <typename T, typename Less>
class FingerList {
public:
    struct Node {
        T value;
        std::vector<Node*> next, prev;
        bool is_head = false;
        int height() const { return int(next.size()); }
    };

    FingerList(Less less, std::uint64_t seed) : less_(less), rng_(seed) {
        head_ = new Node();
        head_->is_head = true;
        head_->next.assign(kMaxHeight, nullptr);
        head_->prev.assign(kMaxHeight, nullptr);
    }
    ~FingerList() {
        Node* n = head_;
        while (n) {
            Node* nx = n->next[0];
            delete n;
            n = nx;
        }
    }
    FingerList(const FingerList&) = delete;
    FingerList& operator=(const FingerList&) = delete;

    Node* head() const { return head_; }
    Node* first() const { return head_->next[0]; }
    static Node* succ(const Node* n) { return n->next[0]; }
    std::size_t size() const { return size_; }

    // Inserts v at its sorted position at or after the finger. The finger must
    // satisfy finger->value <= v (or be the head sentinel).
    Node* insert_with_finger(Node* finger, T v) {
        int lvl = 0;
        Node* u = finger;
        // ascend: while the forward jump at the current level still lands
        // before v, back up to the nearest taller tower and climb
        while (lvl + 1 < kMaxHeight) {
            Node* nx = u->next[lvl];
            if (!nx || !lt(nx->value, v)) break;
            Node* w = u;
            while (!w->is_head && w->height() <= lvl + 1) {
                w = w->prev[lvl];
                tick();
            }
            u = w;
            ++lvl;
        }
        // descend, collecting the update node per level
        std::vector<Node*> upd(std::size_t(lvl) + 1);
        for (int l = lvl; l >= 0; --l) {
            while (Node* nx = u->next[l]) {
                if (lt(nx->value, v))
                    u = nx;
                else
                    break;
            }
            upd[std::size_t(l)] = u;
        }
        const int h = random_height();
        Node* node = new Node();
        node->value = std::move(v);
        node->next.assign(std::size_t(h), nullptr);
        node->prev.assign(std::size_t(h), nullptr);
        // update nodes above the ascent level, by further climbing
        if (h - 1 > lvl) {
            upd.resize(std::size_t(h));
            Node* w = upd[std::size_t(lvl)];
            for (int l = lvl + 1; l < h; ++l) {
                while (!w->is_head && w->height() <= l) {
                    w = w->prev[l - 1];
                    tick();
                }
                while (Node* nx = w->next[l]) {
                    if (lt(nx->value, node->value))
                        w = nx;
                    else
                        break;
                }
                upd[std::size_t(l)] = w;
            }
        }
        for (int l = 0; l < h; ++l) {
            Node* u2 = upd[std::size_t(l)];
            Node* nf = u2->next[l];
            node->next[std::size_t(l)] = nf;
            node->prev[std::size_t(l)] = u2;
            u2->next[l] = node;
            if (nf) nf->prev[std::size_t(l)] = node;
        }
        ++size_;
        return node;
    }

    // Sorted build helper; the remembered tail is only a finger hint.
    Node* append(T v) {
        Node* n = insert_with_finger(tail_ ? tail_ : head_, std::move(v));
        tail_ = n;
        return n;
    }

private:
    static constexpr int kMaxHeight = 40;

    bool lt(const T& a, const T& b) const {
        tick();
        return less_(a, b);
    }
    int random_height() {
        std::uint64_t bits = rng_.next();
        int h = 1;
        while ((bits & 1u) && h < kMaxHeight) {
            bits >>= 1;
            ++h;
        }
        return h;
    }

    Less less_;
    Rng rng_;
    Node* head_;
    Node* tail_ = nullptr;
    std::size_t size_ = 0;
};

} // namespace parfront
