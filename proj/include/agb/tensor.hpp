#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace agb {

using Shape = std::vector<int>;

int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

class Tape;

// Dense float32 tensor with an optional gradient buffer. Copies are shallow
// (shared storage); detached_copy makes an independent leaf.
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(Shape shape, bool requires_grad = false);
    static Tensor full(Shape shape, float value, bool requires_grad = false);
    static Tensor from_values(Shape shape, std::vector<float> values, bool requires_grad = false);
    static Tensor scalar(float value, bool requires_grad = false);

    bool defined() const { return impl_ != nullptr; }
    const Shape& shape() const;
    int64_t numel() const;

    std::span<const float> values() const;
    std::span<float> mutable_values();

    bool requires_grad() const;
    void set_requires_grad(bool rg);

    bool has_grad() const;
    std::span<const float> grad() const;        // throws when absent
    std::span<float> grad_buffer();             // zero-allocates when absent
    void zero_grad();                           // drops the buffer

    float item() const;                         // single-element tensors only
    Tensor detached_copy(bool requires_grad = false) const;
    const void* id() const { return impl_.get(); }

private:
    friend class Tape;
    struct Impl {
        Shape shape;
        std::vector<float> v;
        std::vector<float> g;  // empty until a gradient is written
        bool rg = false;
        const Tape* producer = nullptr;
    };
    std::shared_ptr<Impl> impl_;
    explicit Tensor(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    Impl& impl() const;
};

// Records one forward pass and replays it in reverse to produce gradients.
// A tape is built per forward pass and discarded afterwards. Ops only record
// a backward closure when some input requires a gradient, so inference-style
// passes cost nothing extra. Reductions accumulate in double before being
// stored back into float32 buffers.
class Tape {
public:
    Tape() = default;
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    // Guided mode changes only the relu backward rule: gradients are kept
    // only where both the upstream gradient and the forward input are
    // positive (used for guided backpropagation saliency).
    void set_guided(bool guided) { guided_ = guided; }
    bool guided() const { return guided_; }

    // --- primitives -------------------------------------------------------
    // x: (C,H,W); w: (OC,C,KH,KW); b: (OC). Zero padding, square stride.
    Tensor conv2d(const Tensor& x, const Tensor& w, const Tensor& b, int stride, int pad);
    // x: (N); w: (U,N); b: (U).
    Tensor dense(const Tensor& x, const Tensor& w, const Tensor& b);
    Tensor relu(const Tensor& x);
    Tensor max_pool2d(const Tensor& x, int k, int stride);
    Tensor global_avg_pool(const Tensor& x);    // (C,H,W) -> (C)
    Tensor softmax(const Tensor& x);            // rank-1
    Tensor cross_entropy(const Tensor& logits, int target);  // scalar
    Tensor tanh(const Tensor& x);
    Tensor add(const Tensor& a, const Tensor& b);
    Tensor sub(const Tensor& a, const Tensor& b);
    Tensor mul(const Tensor& a, const Tensor& b);
    Tensor scale(const Tensor& x, float s);
    Tensor l2_norm(const Tensor& x);            // scalar
    Tensor clamp01(const Tensor& x);
    Tensor pick(const Tensor& x, int64_t index);  // scalar view-copy
    Tensor sum(const Tensor& x);                // scalar
    Tensor flatten(const Tensor& x);

    // Extension point for ops defined outside this translation unit (image
    // transforms and the like). The closure receives the output gradient and
    // is responsible for accumulating into the inputs' grad buffers.
    Tensor record(const char* op_name, Shape out_shape, std::vector<float> out_values,
                  std::span<const Tensor> inputs,
                  std::function<void(std::span<const float>)> backward_fn);

    // --- reverse pass -----------------------------------------------------
    // Adds an upstream gradient to a tensor before the replay. The tensor
    // must be a leaf or produced by this tape.
    void seed_grad(const Tensor& t, std::span<const float> upstream);
    // Seeds d(loss)/d(loss) = 1 for a scalar produced by this tape, then
    // replays. Each tape replays at most once.
    void backward(const Tensor& loss);
    // Replays using whatever seeds were planted via seed_grad.
    void backward();

    size_t num_ops() const { return nodes_.size(); }

private:
    struct Node {
        const char* name;
        std::shared_ptr<Tensor::Impl> out;
        std::function<void(std::span<const float>)> fn;
    };
    std::vector<Node> nodes_;
    bool guided_ = false;
    bool replayed_ = false;

    Tensor make_out(Shape shape, std::vector<float> values, bool rg);
    void push(const char* name, const Tensor& out, std::function<void(std::span<const float>)> fn);
    void check_not_replayed(const char* what) const;
};

// Guided-backpropagation relu rule, exposed for direct use and testing:
// keeps upstream entries only where upstream > 0 and forward_input > 0.
std::vector<float> guided_relu_backward(std::span<const float> upstream,
                                        std::span<const float> forward_input);

}  // namespace agb
