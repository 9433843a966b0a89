use super::Shape;
use crate::Scalar;

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Connected components. Clouds are split by union-find over the graph
/// linking members closer than `eps`; analytic shapes are connected and
/// come back whole. Components are ordered by their first member.
pub fn connected_components<T: Scalar>(shape: &Shape<T>, eps: T) -> Vec<Shape<T>> {
    let pts = match shape {
        Shape::PointCloud(p) => p,
        other => return vec![other.clone()],
    };
    let n = pts.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            if pts[i].distance(pts[j]) < eps {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut groups: Vec<Vec<_>> = Vec::new();
    for (i, &p) in pts.iter().enumerate() {
        let r = find(&mut parent, i);
        match roots.iter().position(|&x| x == r) {
            Some(k) => groups[k].push(p),
            None => {
                roots.push(r);
                groups.push(vec![p]);
            }
        }
    }
    groups.into_iter().map(Shape::PointCloud).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Point2, PointClass};

    fn p(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    #[test]
    fn two_clusters() {
        let c = Shape::point_cloud(vec![p(0.0, 0.0), p(0.1, 0.0), p(5.0, 0.0)]).unwrap();
        let parts = connected_components(&c, 0.5);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], Shape::PointCloud(vec![p(0.0, 0.0), p(0.1, 0.0)]));
    }

    #[test]
    fn analytic_is_connected() {
        let d = Shape::disk(p(0.0, 0.0), 1.0).unwrap();
        assert_eq!(connected_components(&d, 0.1), vec![d]);
    }

    #[test]
    fn dense_two_disks_partition() {
        let mut pts = Vec::new();
        for cx in [-2.0, 2.0] {
            for i in -10..=10 {
                for j in -10..=10 {
                    let q = p(cx + i as f64 * 0.1, j as f64 * 0.1);
                    if q.distance(p(cx, 0.0)) <= 1.0 {
                        pts.push(q);
                    }
                }
            }
        }
        let cloud = Shape::point_cloud(pts.clone()).unwrap();
        let parts = connected_components(&cloud, 0.15);
        assert_eq!(parts.len(), 2);
        // partition: every member sits in exactly one component
        let t = cloud.tolerances();
        for q in pts {
            let hits = parts
                .iter()
                .filter(|s| s.membership(q, &t) == PointClass::Boundary)
                .count();
            assert_eq!(hits, 1);
        }
    }
}
