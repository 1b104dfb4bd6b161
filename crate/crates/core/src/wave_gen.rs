pub struct FirstOrderSystem;
pub struct WaveConfig;
