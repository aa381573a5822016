def f_gold ( n ) :
    result = 50
    for i in range ( n ) :
        result += i * 1
    return result


if __name__ == '__main__' :
    param = [ ( 3 , ) ]
    for p in param :
        print ( f_gold ( * p ) )
