pub struct GcsSpec;
