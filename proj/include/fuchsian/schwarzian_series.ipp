// Template definitions for the Schwarzian derivative of truncated series.

namespace fuchsian::schwarzian {

template <class T>
Series<T> schwarzian_of_series(const Series<T>& f)
{
    Series<T> f1 = f.derivative();
    if (f1.is_zero())
        throw TruncationError("Schwarzian of a constant series");
    Series<T> u = f1.derivative() / f1;
    return u.derivative() - u * u * (T(1) / T(2));
}

template <class T>
Series<T> schwarzian_of_series_y3(const Series<T>& f)
{
    Series<T> f1 = f.derivative();
    if (f1.is_zero())
        throw TruncationError("Schwarzian of a constant series");
    Series<T> f2 = f1.derivative(), f3 = f2.derivative();
    Series<T> u = f2 / f1;
    return f3 / f1 - u * u * (T(3) / T(2));
}

}  // namespace fuchsian::schwarzian
