use std::fmt;

use serde::Serialize;

/// Label attached to the domain and codomain of every matrix.
///
/// Degrees are signed so that the zero spaces at the boundary (Sym^{-1}H,
/// Λ^{-1}E) can be named like any other.
///
/// Labels carry no basis data; they only exist so that composing maps
/// between look-alike spaces (Λ^s vs Λ^s_∘ vs K^s) fails loudly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Space {
    LambdaE { n: usize, s: i32 },
    LambdaPrimE { n: usize, s: i32 },
    SymH { r: i32 },
    KE { n: usize, s: i32 },
    Tensor(Vec<Space>),
    /// Unstructured coordinate space, named for diagnostics.
    Coeff { name: String, dim: usize },
}

impl Space {
    pub fn e(n: usize) -> Space {
        Space::LambdaE { n, s: 1 }
    }

    pub fn h() -> Space {
        Space::SymH { r: 1 }
    }

    pub fn coeff(name: &str, dim: usize) -> Space {
        Space::Coeff {
            name: name.to_string(),
            dim,
        }
    }

    /// Tensor product, flattened so that association does not matter.
    pub fn tensor(a: &Space, b: &Space) -> Space {
        let mut parts = Vec::new();
        for x in [a, b] {
            match x {
                Space::Tensor(v) => parts.extend(v.iter().cloned()),
                other => parts.push(other.clone()),
            }
        }
        Space::Tensor(parts)
    }

    pub fn tensor_all(items: &[Space]) -> Space {
        let mut it = items.iter();
        let first = it.next().cloned().unwrap_or(Space::coeff("C", 1));
        it.fold(first, |acc, x| Space::tensor(&acc, x))
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::LambdaE { n, s } => write!(f, "Λ^{s}E(n={n})"),
            Space::LambdaPrimE { n, s } => write!(f, "Λ^{s}_∘E(n={n})"),
            Space::SymH { r } => write!(f, "Sym^{r}H"),
            Space::KE { n, s } => write!(f, "K^{s}E(n={n})"),
            Space::Tensor(v) => {
                for (k, x) in v.iter().enumerate() {
                    if k > 0 {
                        write!(f, "⊗")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Space::Coeff { name, dim } => write!(f, "{name}[{dim}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_is_flat() {
        let a = Space::h();
        let b = Space::e(2);
        let c = Space::LambdaPrimE { n: 2, s: 1 };
        let left = Space::tensor(&Space::tensor(&a, &b), &c);
        let right = Space::tensor(&a, &Space::tensor(&b, &c));
        assert_eq!(left, right);
        assert_eq!(left.to_string(), "Sym^1H⊗Λ^1E(n=2)⊗Λ^1_∘E(n=2)");
    }
}
