# Types package
