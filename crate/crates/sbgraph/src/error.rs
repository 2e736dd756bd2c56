use thiserror::Error;

/// Failures surfaced by graph construction and by analyses whose
/// preconditions are not met.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc endpoint {endpoint} out of range for {n} vertices")]
    EndpointOutOfRange { endpoint: u32, n: u32 },

    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoop(u32),

    #[error("arc ({0}, {1}) is not present in the graph")]
    ArcNotPresent(u32, u32),

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("operation requires at least {required} vertices, graph has {actual}")]
    TooFewVertices { required: u32, actual: u32 },

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("graph is strongly connected but its underlying graph is not biconnected")]
    UnderlyingNotBiconnected,

    #[error("vertex {0} is not reachable from the root")]
    UnreachableVertex(u32),

    #[error("certificate arc ({0}, {1}) does not belong to the graph")]
    ForeignCertificateArc(u32, u32),

    #[error("exhaustive search is limited to {limit} vertices, graph has {actual}")]
    ExhaustiveSizeGuard { limit: u32, actual: u32 },

    #[error(
        "no arc outside the working set joins two separate components; \
         the input violates the augmentation contract"
    )]
    AugmentationStuck,

    #[error("generator requires 3 <= n and n + 2 <= m, got n = {n}, m = {m}")]
    GeneratorParams { n: u64, m: u64 },
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI when reporting
    /// precondition failures.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EndpointOutOfRange { .. } => "endpoint_out_of_range",
            Error::SelfLoop(_) => "self_loop",
            Error::ArcNotPresent(..) => "arc_not_present",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::TooFewVertices { .. } => "too_few_vertices",
            Error::NotStronglyConnected => "not_strongly_connected",
            Error::UnderlyingNotBiconnected => "underlying_not_biconnected",
            Error::UnreachableVertex(_) => "unreachable_vertex",
            Error::ForeignCertificateArc(..) => "foreign_certificate_arc",
            Error::ExhaustiveSizeGuard { .. } => "exhaustive_size_guard",
            Error::AugmentationStuck => "augmentation_stuck",
            Error::GeneratorParams { .. } => "generator_params",
        }
    }
}
