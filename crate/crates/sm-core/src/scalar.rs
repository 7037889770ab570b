pub trait Real: num_traits::Float + rustfft::FftNum {}
impl Real for f32 {}
impl Real for f64 {}
