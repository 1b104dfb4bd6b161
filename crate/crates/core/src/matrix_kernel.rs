pub struct SvdResult;
