namespace percmap {}
