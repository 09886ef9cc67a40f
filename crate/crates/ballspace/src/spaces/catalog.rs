//! Model registry: builds catalogued spaces by id and lists them with their
//! ground-truth flags.

use crate::spaces::{
    EuclideanSpace, Flag, GraphSpace, GroundTruth, HalfPlane, HyperbolicPlane, ModelInfo,
    ModelParams, ModelSpace, ProductMax, PullbackLine, TaxicabR2,
};
use crate::Error;

pub const DEFAULT_CHAIN_K: i64 = 3;
pub const DEFAULT_LINE_HALF_WIDTH: f64 = 40.0;
pub const DEFAULT_TEE_RAY: f64 = 12.0;

/// Builds a catalogued model by id.
pub fn build_model(id: &str, params: &ModelParams) -> Result<Box<dyn ModelSpace>, Error> {
    match id {
        "euclidean_rn" | "euclidean_r2" => {
            let dim = if id == "euclidean_r2" {
                2
            } else {
                params.dim.unwrap_or(2)
            };
            Ok(Box::new(EuclideanSpace::new(dim)?))
        }
        "euclidean_r1" => Ok(Box::new(EuclideanSpace::new(1)?)),
        "taxicab_r2" => Ok(Box::new(TaxicabR2)),
        "hyperbolic_plane" => Ok(Box::new(HyperbolicPlane)),
        "halfplane" => Ok(Box::new(HalfPlane)),
        "tee" => Ok(Box::new(GraphSpace::tee(DEFAULT_TEE_RAY)?)),
        "diamond" => Ok(Box::new(GraphSpace::diamond()?)),
        "diamond_chain" => Ok(Box::new(GraphSpace::diamond_chain(
            params.k.unwrap_or(DEFAULT_CHAIN_K),
        )?)),
        "circle" => {
            let c = params.circumference.unwrap_or(2.0 * std::f64::consts::PI);
            Ok(Box::new(GraphSpace::circle(c)?))
        }
        "real_line" => Ok(Box::new(GraphSpace::real_line(DEFAULT_LINE_HALF_WIDTH)?)),
        "product_max" => {
            let fx = params.factor_x.as_deref().unwrap_or("real_line");
            let fy = params.factor_y.as_deref().unwrap_or("real_line");
            let x = build_model(fx, &ModelParams::default())?;
            let y = build_model(fy, &ModelParams::default())?;
            Ok(Box::new(ProductMax::new(x, y)))
        }
        "pullback_line" => Ok(Box::new(PullbackLine::new(params.family_n.unwrap_or(8))?)),
        other => Err(Error::Invalid(format!("unknown model id: {other}"))),
    }
}

/// Stable-ordered catalog with ground-truth flags.
pub fn list_models() -> Vec<ModelInfo> {
    fn gt(sgc: Flag, mid: Flag) -> GroundTruth {
        GroundTruth {
            strongly_geodesically_complete: sgc,
            unique_midpoints: mid,
        }
    }
    vec![
        ModelInfo {
            id: "euclidean_rn",
            ground_truth: gt(Flag::Yes, Flag::Yes),
            parameters: "dim (default 2; ball nets for dim 1, 2)",
        },
        ModelInfo {
            id: "taxicab_r2",
            ground_truth: gt(Flag::Yes, Flag::No),
            parameters: "",
        },
        ModelInfo {
            id: "hyperbolic_plane",
            ground_truth: gt(Flag::Yes, Flag::Yes),
            parameters: "",
        },
        ModelInfo {
            id: "halfplane",
            ground_truth: gt(Flag::No, Flag::Yes),
            parameters: "",
        },
        ModelInfo {
            id: "tee",
            ground_truth: gt(Flag::No, Flag::Yes),
            parameters: "",
        },
        ModelInfo {
            id: "diamond",
            ground_truth: gt(Flag::No, Flag::No),
            parameters: "",
        },
        ModelInfo {
            id: "diamond_chain",
            ground_truth: gt(Flag::No, Flag::No),
            parameters: "k: diamond window half-count (default 3)",
        },
        ModelInfo {
            id: "circle",
            ground_truth: gt(Flag::No, Flag::No),
            parameters: "circumference (default 2*pi)",
        },
        ModelInfo {
            id: "real_line",
            ground_truth: gt(Flag::Yes, Flag::Yes),
            parameters: "",
        },
        ModelInfo {
            id: "product_max",
            ground_truth: gt(Flag::Yes, Flag::No),
            parameters: "factor_x, factor_y (default real_line each)",
        },
        ModelInfo {
            id: "pullback_line",
            ground_truth: gt(Flag::Yes, Flag::Yes),
            parameters: "family_n >= 2 (default 8)",
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_builds_every_listed_model() {
        for info in list_models() {
            let model = build_model(info.id, &ModelParams::default()).unwrap();
            assert!(!model.id().is_empty());
        }
    }

    #[test]
    fn unknown_model_is_an_error() {
        assert!(build_model("unknown_space", &ModelParams::default()).is_err());
    }
}
