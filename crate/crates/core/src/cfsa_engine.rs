pub struct CfsaModel;
pub struct EpsilonIndex;
pub struct SnapshotMatrix;
