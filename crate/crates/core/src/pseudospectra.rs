pub struct PseudospectrumGrid;
